//! Deterministic corpus construction: the shape catalog and 2-category seeds
//! closed under embeddings, duals, products and one parallel-square
//! identification, plus the catalogued functors between them.

use crate::colimits::identify_parallel_squares;
use crate::constructions::*;
use crate::core::*;
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    Small,
    Standard,
}

impl Profile {
    pub fn parse(s: &str) -> Option<Profile> {
        match s {
            "small" => Some(Profile::Small),
            "standard" => Some(Profile::Standard),
            _ => None,
        }
    }
}

pub struct CorpusFunctor {
    pub name: String,
    pub source: String,
    pub target: String,
    pub functor: DoubleFunctor,
}

pub struct Corpus {
    pub categories: Vec<(String, DoubleCategory)>,
    pub functors: Vec<CorpusFunctor>,
}

impl Corpus {
    pub fn category(&self, name: &str) -> &DoubleCategory {
        &self
            .categories
            .iter()
            .find(|(n, _)| n == name)
            .unwrap_or_else(|| panic!("corpus category {name}"))
            .1
    }

    /// All corpus 2-categories (the members whose verticals are identities).
    pub fn two_categories(&self) -> Vec<(String, TwoCategory)> {
        self.categories
            .iter()
            .filter_map(|(n, d)| TwoCategory::new(d.clone()).ok().map(|c| (n.clone(), c)))
            .collect()
    }

    /// Functor list in the shape the audit expects.
    pub fn functor_pairs(&self) -> Vec<(String, DoubleFunctor)> {
        self.functors
            .iter()
            .map(|f| (f.name.clone(), f.functor.clone()))
            .collect()
    }
}

const MAX_OBJECTS: usize = 8;
const MAX_SQUARES: usize = 64;

fn within_caps(d: &DoubleCategory) -> bool {
    d.object_count() <= MAX_OBJECTS && d.square_count() <= MAX_SQUARES
}

/// The ladder: three objects stacked vertically with two parallel squares at
/// each level and a Z/2 composition on the parallel pairs. It is the
/// smallest corpus member whose congruence closure genuinely propagates.
pub fn ladder() -> DoubleCategory {
    ladder_raw(false).build().expect("the ladder is valid")
}

/// The ladder with its transverse table redirected; violates interchange.
pub fn broken_ladder_raw() -> RawDoubleCategory {
    ladder_raw(true)
}

fn ladder_raw(broken: bool) -> RawDoubleCategory {
    let mut raw = RawDoubleCategory::new();
    raw.object("0").object("1").object("2");
    raw.add_vmor("u", "0", "1");
    raw.add_vmor("w", "1", "2");
    raw.add_vmor("vu", "0", "2");
    raw.add_vcomp("u", "w", "vu");
    for i in 0..2 {
        raw.add_square(format!("x{i}"), "id:0", "id:1", "u", "u");
        raw.add_square(format!("z{i}"), "id:0", "id:2", "vu", "vu");
    }
    for i in 0..2u32 {
        for j in 0..2u32 {
            let k = (i + j) % 2;
            raw.add_sq_hcomp(format!("x{i}"), format!("x{j}"), format!("x{k}"));
            raw.add_sq_hcomp(format!("z{i}"), format!("z{j}"), format!("z{k}"));
        }
    }
    for i in 0..2 {
        let z = if broken { 1 - i } else { i };
        raw.add_sq_vcomp(format!("x{i}"), "idsq:w", format!("z{z}"));
    }
    raw
}

/// Build the deterministic corpus for a profile.
pub fn build_corpus(profile: Profile) -> Corpus {
    let mut categories: Vec<(String, DoubleCategory)> = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    let mut push = |name: &str, d: DoubleCategory, categories: &mut Vec<(String, DoubleCategory)>| {
        if !within_caps(&d) {
            return;
        }
        let key = d.canonical_key();
        if seen.insert(key) {
            categories.push((name.to_string(), d));
        }
    };

    for name in ShapeName::ALL {
        push(
            &format!("shape-{}", name.as_str()),
            shape(name),
            &mut categories,
        );
    }

    let seeds: Vec<(&str, TwoCategory)> = vec![
        ("one", from_category(&["*"], &[], &[]).unwrap()),
        ("two", walking_arrow()),
        ("iso", walking_iso()),
        ("sigma2", walking_2cell()),
        ("sigmai", walking_2iso()),
        (
            "pair",
            from_category(
                &["0", "1", "2"],
                &[("f", "0", "1"), ("g", "1", "2"), ("gf", "0", "2")],
                &[("f", "g", "gf")],
            )
            .unwrap(),
        ),
        (
            "z2",
            from_category(&["*"], &[("s", "*", "*")], &[("s", "s", "id:*")]).unwrap(),
        ),
    ];

    for (seed_name, c) in &seeds {
        push(&format!("h-{seed_name}"), embed(EmbedKind::H, c), &mut categories);
        push(&format!("v-{seed_name}"), embed(EmbedKind::V, c), &mut categories);
        push(&format!("sq-{seed_name}"), embed(EmbedKind::Sq, c), &mut categories);
    }
    push("hsim-iso", embed(EmbedKind::Hsim, &walking_iso()), &mut categories);
    push(
        "hsim-z2",
        embed(EmbedKind::Hsim, &seeds.iter().find(|(n, _)| *n == "z2").unwrap().1),
        &mut categories,
    );
    push(
        "sqvop-iso",
        embed(EmbedKind::SqVop, &walking_iso()),
        &mut categories,
    );
    push("ladder", ladder(), &mut categories);

    // one round of identifying parallel squares
    let parsq = shape(ShapeName::ParSq);
    let (parsq_quotient, parsq_q_functor) = {
        let a = parsq.square_by_name("par:0").unwrap();
        let b = parsq.square_by_name("par:1").unwrap();
        identify_parallel_squares(&parsq, a, b).unwrap()
    };
    push("parsq-quotient", parsq_quotient.clone(), &mut categories);
    let (ladder_quotient, ladder_q_functor) = {
        let l = ladder();
        let a = l.square_by_name("x0").unwrap();
        let b = l.square_by_name("x1").unwrap();
        identify_parallel_squares(&l, a, b).unwrap()
    };
    push("ladder-quotient", ladder_quotient.clone(), &mut categories);

    if profile == Profile::Standard {
        // one more closure round, under the size caps
        let h2 = shape(ShapeName::H2);
        let v2 = shape(ShapeName::V2);
        let sq2 = shape(ShapeName::Sq2);
        let sqi = embed(EmbedKind::Sq, &walking_iso());
        let hsigmai = shape(ShapeName::HSigmaI);
        push("prod-sq2-h2", product(&sq2, &h2).cat, &mut categories);
        push("prod-sqi-h2", product(&sqi, &h2).cat, &mut categories);
        push("prod-parsq-h2", product(&parsq, &h2).cat, &mut categories);
        push("prod-hsigmai-v2", product(&hsigmai, &v2).cat, &mut categories);
        push("prod-h2-h2", product(&h2, &h2).cat, &mut categories);
        push(
            "coprod-sq2-sq2",
            coproduct(&sq2, &sq2).cat,
            &mut categories,
        );
        push(
            "sqvop-sigmai",
            embed(EmbedKind::SqVop, &walking_2iso()),
            &mut categories,
        );
        push(
            "vsim-iso",
            embed(EmbedKind::Vsim, &walking_iso()),
            &mut categories,
        );
        let existing: Vec<(String, DoubleCategory)> = categories.clone();
        for (name, d) in existing {
            push(
                &format!("t-{name}"),
                dualize(DualKind::Transpose, &d),
                &mut categories,
            );
        }
    }

    // ---- functors ----
    let mut functors: Vec<CorpusFunctor> = Vec::new();
    for (name, d) in &categories {
        functors.push(CorpusFunctor {
            name: format!("id-{name}"),
            source: name.clone(),
            target: name.clone(),
            functor: DoubleFunctor::identity(d),
        });
    }

    let lookup = |cats: &[(String, DoubleCategory)], name: &str| -> DoubleCategory {
        cats.iter()
            .find(|(n, _)| n == name)
            .unwrap_or_else(|| panic!("corpus category {name}"))
            .1
            .clone()
    };
    let by_names = |name: &str,
                    srcn: &str,
                    tgtn: &str,
                    maps: &[(&str, &[(&str, &str)])],
                    cats: &[(String, DoubleCategory)]|
     -> CorpusFunctor {
        let src = lookup(cats, srcn);
        let tgt = lookup(cats, tgtn);
        let mut data = RawFunctorData::default();
        for (level, pairs) in maps {
            let dest = match *level {
                "objects" => &mut data.on_objects,
                "hmor" => &mut data.on_hmor,
                "vmor" => &mut data.on_vmor,
                "squares" => &mut data.on_squares,
                _ => unreachable!(),
            };
            for (a, b) in *pairs {
                dest.push((a.to_string(), b.to_string()));
            }
        }
        let functor = validate_double_functor(&data, &src, &tgt)
            .unwrap_or_else(|e| panic!("corpus functor {name}: {e}"));
        CorpusFunctor {
            name: name.to_string(),
            source: srcn.to_string(),
            target: tgtn.to_string(),
            functor,
        }
    };

    let specials: Vec<CorpusFunctor> = vec![
        // the J0-style collapse: a canonical trivial fibration
        by_names(
            "collapse-hsigmai-h2",
            "shape-hsigmai",
            "shape-h2",
            &[
                ("objects", &[("0", "0"), ("1", "1")]),
                ("hmor", &[("f", "f"), ("g", "f")]),
                ("squares", &[("alpha", "e:f"), ("alphainv", "e:f")]),
            ],
            &categories,
        ),
        by_names(
            "collapse-hsigma2-h2",
            "shape-hsigma2",
            "shape-h2",
            &[
                ("objects", &[("0", "0"), ("1", "1")]),
                ("hmor", &[("f", "f"), ("g", "f")]),
                ("squares", &[("alpha", "e:f")]),
            ],
            &categories,
        ),
        by_names(
            "incl-h2-hsigmai",
            "shape-h2",
            "shape-hsigmai",
            &[
                ("objects", &[("0", "0"), ("1", "1")]),
                ("hmor", &[("f", "f")]),
            ],
            &categories,
        ),
        by_names(
            "incl-hsigma2-hsigmai",
            "shape-hsigma2",
            "shape-hsigmai",
            &[
                ("objects", &[("0", "0"), ("1", "1")]),
                ("hmor", &[("f", "f"), ("g", "g")]),
                ("squares", &[("alpha", "alpha")]),
            ],
            &categories,
        ),
        by_names(
            "incl-one-h2-at0",
            "shape-one",
            "shape-h2",
            &[("objects", &[("*", "0")])],
            &categories,
        ),
        by_names(
            "incl-one-h2-at1",
            "shape-one",
            "shape-h2",
            &[("objects", &[("*", "1")])],
            &categories,
        ),
        by_names(
            "incl-one-hsigmai-at0",
            "shape-one",
            "shape-hsigmai",
            &[("objects", &[("*", "0")])],
            &categories,
        ),
        by_names(
            "incl-boundary-hxv",
            "shape-boundary-hxv",
            "shape-hxv",
            &[
                (
                    "objects",
                    &[
                        ("(0,0)", "(0,0)"),
                        ("(0,1)", "(0,1)"),
                        ("(1,0)", "(1,0)"),
                        ("(1,1)", "(1,1)"),
                    ],
                ),
                ("hmor", &[("(f,id:0)", "(f,id:0)"), ("(f,id:1)", "(f,id:1)")]),
                ("vmor", &[("(id:0,f)", "(id:0,f)"), ("(id:1,f)", "(id:1,f)")]),
            ],
            &categories,
        ),
        by_names(
            "par-to-hxv",
            "shape-parsq",
            "shape-hxv",
            &[
                (
                    "objects",
                    &[
                        ("(0,0)", "(0,0)"),
                        ("(0,1)", "(0,1)"),
                        ("(1,0)", "(1,0)"),
                        ("(1,1)", "(1,1)"),
                    ],
                ),
                ("hmor", &[("(f,id:0)", "(f,id:0)"), ("(f,id:1)", "(f,id:1)")]),
                ("vmor", &[("(id:0,f)", "(id:0,f)"), ("(id:1,f)", "(id:1,f)")]),
                (
                    "squares",
                    &[("par:0", "(e:f,idsq:f)"), ("par:1", "(e:f,idsq:f)")],
                ),
            ],
            &categories,
        ),
        by_names(
            "incl-h2-sq2",
            "shape-h2",
            "shape-sq2",
            &[
                ("objects", &[("0", "0"), ("1", "1")]),
                ("hmor", &[("f", "f")]),
            ],
            &categories,
        ),
        by_names(
            "incl-v2-sq2",
            "shape-v2",
            "shape-sq2",
            &[
                ("objects", &[("0", "0"), ("1", "1")]),
                ("vmor", &[("f", "f")]),
            ],
            &categories,
        ),
        by_names(
            "incl-hiso-sqiso",
            "h-iso",
            "sq-iso",
            &[
                ("objects", &[("0", "0"), ("1", "1")]),
                ("hmor", &[("f", "f"), ("g", "g")]),
            ],
            &categories,
        ),
        by_names(
            "endo-sqz2-collapse",
            "sq-z2",
            "sq-z2",
            &[
                ("objects", &[("*", "*")]),
                ("hmor", &[("s", "id:*")]),
                ("vmor", &[("s", "id:*")]),
                (
                    "squares",
                    &[
                        ("sq[s|s|s|s|box:*]", "box:*"),
                        ("sq[s|s|id:*|id:*|e:s]", "box:*"),
                        ("sq[s|id:*|id:*|s|box:*]", "box:*"),
                        ("sq[id:*|s|s|id:*|box:*]", "box:*"),
                        ("sq[id:*|id:*|s|s|e:s]", "box:*"),
                    ],
                ),
            ],
            &categories,
        ),
    ];
    functors.extend(specials);

    // terminal and initial functors
    let one = lookup(&categories, "shape-one");
    for name in [
        "shape-h2",
        "shape-sq2",
        "shape-hxv",
        "shape-empty",
        "shape-hsigmai",
        "sq-iso",
        "ladder",
    ] {
        let d = lookup(&categories, name);
        functors.push(CorpusFunctor {
            name: format!("terminal-{name}"),
            source: name.to_string(),
            target: "shape-one".to_string(),
            functor: DoubleFunctor::terminal(&d, &one),
        });
    }
    {
        let empty = lookup(&categories, "shape-empty");
        let h2 = lookup(&categories, "shape-h2");
        let empty_to_h2 = crate::core::functor::functor_from_maps(
            &empty,
            &h2,
            vec![],
            vec![],
            vec![],
            vec![],
        )
        .unwrap();
        functors.push(CorpusFunctor {
            name: "initial-h2".to_string(),
            source: "shape-empty".to_string(),
            target: "shape-h2".to_string(),
            functor: empty_to_h2,
        });
    }

    // projections of the walking square
    {
        let h2 = shape(ShapeName::H2);
        let v2 = shape(ShapeName::V2);
        let p = product(&h2, &v2);
        functors.push(CorpusFunctor {
            name: "proj-hxv-h2".to_string(),
            source: "shape-hxv".to_string(),
            target: "shape-h2".to_string(),
            functor: p.proj1(),
        });
        functors.push(CorpusFunctor {
            name: "proj-hxv-v2".to_string(),
            source: "shape-hxv".to_string(),
            target: "shape-v2".to_string(),
            functor: p.proj2(),
        });
    }

    // coproduct fold and inclusions
    {
        let cop = coproduct(&one, &one);
        if let Some((name, _)) = categories
            .iter()
            .find(|(_, d)| d.canonical_key() == cop.cat.canonical_key())
        {
            let fold = crate::core::functor::functor_from_maps(
                &cop.cat,
                &one,
                vec![ObjId(0); 2],
                vec![one.h_identity(ObjId(0)); 2],
                vec![one.v_identity(ObjId(0)); 2],
                vec![one.box_sq(ObjId(0)); 2],
            )
            .unwrap();
            functors.push(CorpusFunctor {
                name: "fold-two-points".to_string(),
                source: name.clone(),
                target: "shape-one".to_string(),
                functor: fold,
            });
            functors.push(CorpusFunctor {
                name: "incl-left-point".to_string(),
                source: "shape-one".to_string(),
                target: name.clone(),
                functor: cop.incl1(),
            });
        } else {
            let name = "two-points".to_string();
            categories.push((name.clone(), cop.cat.clone()));
            let fold = crate::core::functor::functor_from_maps(
                &cop.cat,
                &one,
                vec![ObjId(0); 2],
                vec![one.h_identity(ObjId(0)); 2],
                vec![one.v_identity(ObjId(0)); 2],
                vec![one.box_sq(ObjId(0)); 2],
            )
            .unwrap();
            functors.push(CorpusFunctor {
                name: "fold-two-points".to_string(),
                source: name.clone(),
                target: "shape-one".to_string(),
                functor: fold,
            });
            functors.push(CorpusFunctor {
                name: "incl-left-point".to_string(),
                source: "shape-one".to_string(),
                target: name,
                functor: cop.incl1(),
            });
        }
    }

    // quotient functors from the identification round
    if let Some((qname, _)) = categories
        .iter()
        .find(|(_, d)| d.canonical_key() == parsq_quotient.canonical_key())
    {
        functors.push(CorpusFunctor {
            name: "quotient-parsq".to_string(),
            source: "shape-parsq".to_string(),
            target: qname.clone(),
            functor: parsq_q_functor,
        });
    }
    if let Some((qname, _)) = categories
        .iter()
        .find(|(_, d)| d.canonical_key() == ladder_quotient.canonical_key())
    {
        functors.push(CorpusFunctor {
            name: "quotient-ladder".to_string(),
            source: "ladder".to_string(),
            target: qname.clone(),
            functor: ladder_q_functor,
        });
    }

    // the diagonal of the walking arrow, in the standard profile
    if profile == Profile::Standard {
        let h2 = shape(ShapeName::H2);
        let p = product(&h2, &h2);
        if categories
            .iter()
            .any(|(_, d)| d.canonical_key() == p.cat.canonical_key())
        {
            let name = categories
                .iter()
                .find(|(_, d)| d.canonical_key() == p.cat.canonical_key())
                .unwrap()
                .0
                .clone();
            functors.push(CorpusFunctor {
                name: "diag-h2".to_string(),
                source: "shape-h2".to_string(),
                target: name,
                functor: p.pair(&DoubleFunctor::identity(&h2), &DoubleFunctor::identity(&h2)),
            });
        }
    }

    Corpus {
        categories,
        functors,
    }
}
