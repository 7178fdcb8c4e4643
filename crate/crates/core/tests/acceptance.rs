//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wilddiag::congruence::{congruent, determinant, search_congruence};
use wilddiag::io::catalog::{self, CATALOG};
use wilddiag::legs::leg_pairing_contribution;
use wilddiag::{
    compile, dim_oracle, hom_class, Circle, Compiled, CycloNumber, Diagram, NodeKind, ProblemInput,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn example(name: &str) -> Result<Compiled, String> {
    let doc = catalog::catalog(name).map_err(|e| e.to_string())?;
    compile(&doc.input).map_err(|e| format!("{name}: {e}"))
}

fn matrix(rows: &[&[i64]]) -> Vec<Vec<i64>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn permute(m: &[Vec<i64>], order: &[usize]) -> Vec<Vec<i64>> {
    order
        .iter()
        .map(|&i| order.iter().map(|&j| m[i][j]).collect())
        .collect()
}

fn airy() -> Outcome {
    let c = example("airy")?;
    ensure(c.diagram.len() == 1, || {
        format!("{} nodes", c.diagram.len())
    })?;
    ensure(c.diagram.loops(0) == 0, || {
        format!("{} loops", c.diagram.loops(0))
    })?;
    ensure(c.cartan.cartan == matrix(&[&[2]]), || {
        format!("C = {:?}", c.cartan.cartan)
    })?;
    ensure(c.cartan.dim_b == 0, || format!("dim {}", c.cartan.dim_b))
}

fn painleve_one() -> Outcome {
    let c = example("p1")?;
    ensure(c.diagram.len() == 1 && c.diagram.loops(0) == 1, || {
        "expected one node with one loop".into()
    })?;
    ensure(c.cartan.cartan == matrix(&[&[0]]), || {
        format!("C = {:?}", c.cartan.cartan)
    })?;
    ensure(c.cartan.dim_b == 2, || format!("dim {}", c.cartan.dim_b))
}

fn weber() -> Outcome {
    let c = example("weber")?;
    let a2 = Diagram::from_parts(&[1, 1], matrix(&[&[0, 1], &[1, 0]])).unwrap();
    ensure(c.diagram.isomorphism_to(&a2).is_some(), || "not A2".into())?;
    ensure(c.cartan.cartan == matrix(&[&[2, -1], &[-1, 2]]), || {
        format!("C = {:?}", c.cartan.cartan)
    })?;
    ensure(c.cartan.dim_b == 0, || format!("dim {}", c.cartan.dim_b))
}

fn painleve_two() -> Outcome {
    let jm = example("p2-jm")?;
    let fnl = example("p2-fn")?;
    let affine_a1 = Diagram::from_parts(&[1, 1], matrix(&[&[0, 2], &[2, 0]])).unwrap();
    for (name, c) in [("p2-jm", &jm), ("p2-fn", &fnl)] {
        ensure(c.diagram.isomorphism_to(&affine_a1).is_some(), || {
            format!("{name} is not affine A1")
        })?;
        ensure(c.cartan.dim_b == 2, || {
            format!("{name}: dim {}", c.cartan.dim_b)
        })?;
    }
    ensure(
        jm.cartan.cartan == fnl.cartan.cartan && jm.cartan.dims == fnl.cartan.dims,
        || format!("{:?} vs {:?}", jm.cartan.cartan, fnl.cartan.cartan),
    )?;
    ensure(jm.diagram.isomorphism_to(&fnl.diagram).is_some(), || {
        "Lax pairs differ".into()
    })
}

fn bessel_clifford() -> Outcome {
    let c = example("bessel-clifford")?;
    let order = catalog::entry("bessel-clifford")
        .unwrap()
        .expected
        .published_order
        .unwrap();
    let published = matrix(&[&[2, -2], &[-2, 4]]);
    ensure(permute(&c.cartan.cartan, order) == published, || {
        format!("C = {:?}", c.cartan.cartan)
    })?;
    let ramified = c
        .diagram
        .nodes()
        .iter()
        .position(|n| n.kind == NodeKind::Core)
        .unwrap();
    ensure(c.input.infinity()[0].circle.ram() == 2, || {
        "core node is not ramified".into()
    })?;
    ensure(c.diagram.loops(ramified) == -1, || {
        format!("loops {}", c.diagram.loops(ramified))
    })?;
    ensure(c.diagram.loops(1 - ramified) == 0, || {
        "loop on the leg node".into()
    })?;
    ensure(c.cartan.dim_b == 0, || format!("dim {}", c.cartan.dim_b))
}

fn painleve_three() -> Outcome {
    let c = example("p3")?;
    let order = catalog::entry("p3")
        .unwrap()
        .expected
        .published_order
        .unwrap();
    let published = matrix(&[&[2, -2, 0], &[-2, 4, -2], &[0, -2, 2]]);
    ensure(permute(&c.cartan.cartan, order) == published, || {
        format!("C = {:?}", c.cartan.cartan)
    })?;
    let central = order[1];
    ensure(c.diagram.nodes()[central].kind == NodeKind::Core, || {
        "central node is not the core node".into()
    })?;
    ensure(c.diagram.loops(central) == -1, || {
        format!("central loops {}", c.diagram.loops(central))
    })?;
    ensure(c.cartan.dim_b == 2, || format!("dim {}", c.cartan.dim_b))
}

fn lemma() -> Outcome {
    let sum = matrix(&[&[2, -2, 0], &[-2, 2, 0], &[0, 0, 2]]);
    let d2 = matrix(&[&[2, -2, 0], &[-2, 4, -2], &[0, -2, 2]]);
    let g = matrix(&[&[0, 1, 0], &[0, 0, 1], &[-1, 1, 0]]);
    ensure(congruent(&sum, &d2, &g).unwrap(), || {
        "published witness fails".into()
    })?;
    let p3 = example("p3")?;
    let order = catalog::entry("p3")
        .unwrap()
        .expected
        .published_order
        .unwrap();
    ensure(permute(&p3.cartan.cartan, order) == d2, || {
        "P3 Cartan matrix differs".into()
    })?;
    match search_congruence(&sum, &d2, 2).unwrap() {
        Some(w) => ensure(
            determinant(&w).abs() == 1 && congruent(&sum, &d2, &w).unwrap(),
            || format!("bad witness {w:?}"),
        ),
        None => Err("search with bound 2 found nothing".into()),
    }
}

fn painleve_four_to_six() -> Outcome {
    let affine_a2 =
        Diagram::from_parts(&[1, 1, 1], matrix(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]])).unwrap();
    let affine_a3 = Diagram::from_parts(
        &[1, 1, 1, 1],
        matrix(&[&[0, 1, 0, 1], &[1, 0, 1, 0], &[0, 1, 0, 1], &[1, 0, 1, 0]]),
    )
    .unwrap();
    let affine_d4 = Diagram::from_parts(
        &[2, 1, 1, 1, 1],
        matrix(&[
            &[0, 1, 1, 1, 1],
            &[1, 0, 0, 0, 0],
            &[1, 0, 0, 0, 0],
            &[1, 0, 0, 0, 0],
            &[1, 0, 0, 0, 0],
        ]),
    )
    .unwrap();
    for (name, shape, params) in [
        ("p4", &affine_a2, 2),
        ("p5", &affine_a3, 3),
        ("p6", &affine_d4, 4),
    ] {
        let c = example(name)?;
        ensure(c.diagram.isomorphism_to(shape).is_some(), || {
            format!("{name} has the wrong shape")
        })?;
        ensure(c.cartan.dim_b == 2, || {
            format!("{name}: dim {}", c.cartan.dim_b)
        })?;
        ensure(c.diagram.len() - 1 == params, || {
            format!("{name}: {} nodes", c.diagram.len())
        })?;
    }
    let counts: Vec<usize> = ["p1", "p2-jm", "p3", "p4", "p5", "p6"]
        .iter()
        .map(|n| example(n).map(|c| c.diagram.len() - 1))
        .collect::<Result<_, _>>()?;
    ensure(counts == vec![0, 1, 2, 2, 3, 4], || {
        format!("parameter counts {counts:?}")
    })
}

fn special_solutions() -> Outcome {
    let pairs = [
        ("p2-jm", "airy"),
        ("p2-fn", "airy"),
        ("p3", "bessel-clifford"),
        ("p4", "weber"),
        ("p5", "kummer"),
        ("p6", "gauss"),
    ];
    for (painleve, linear) in pairs {
        let special = catalog::entry(painleve).unwrap().expected.special.unwrap();
        ensure(special.linear == linear, || {
            format!("{painleve}: catalog pairs with {}", special.linear)
        })?;
        let big = example(painleve)?.diagram.remove_node(special.remove);
        let small = example(linear)?.diagram;
        ensure(big.isomorphism_to(&small).is_some(), || {
            format!("{painleve} minus node {} is not {linear}", special.remove)
        })?;
    }
    let kummer = example("kummer")?;
    let a3 =
        Diagram::from_parts(&[1, 1, 1], matrix(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]])).unwrap();
    ensure(kummer.diagram.isomorphism_to(&a3).is_some(), || {
        "Kummer is not A3".into()
    })?;
    let gauss = example("gauss")?;
    let d4 = Diagram::from_parts(
        &[2, 1, 1, 1],
        matrix(&[&[0, 1, 1, 1], &[1, 0, 0, 0], &[1, 0, 0, 0], &[1, 0, 0, 0]]),
    )
    .unwrap();
    ensure(gauss.diagram.isomorphism_to(&d4).is_some(), || {
        "Gauss is not D4".into()
    })
}

fn random_corpus(count: usize, seed: u64) -> Vec<ProblemInput> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| common::random_input(&mut rng)).collect()
}

fn dimension_oracle() -> Outcome {
    let start = Instant::now();
    for e in CATALOG {
        let input = e.document().unwrap().input;
        let c = compile(&input).map_err(|err| err.to_string())?;
        let oracle = dim_oracle(&input).map_err(|err| err.to_string())?;
        ensure(oracle == c.cartan.dim_b, || {
            format!("{}: oracle {oracle} vs {}", e.name, c.cartan.dim_b)
        })?;
    }
    let corpus = random_corpus(240, 7);
    for (k, input) in corpus.iter().enumerate() {
        let c = compile(input).map_err(|err| format!("input {k}: {err}"))?;
        let oracle = dim_oracle(input).map_err(|err| err.to_string())?;
        ensure(oracle == c.cartan.dim_b, || {
            format!(
                "input {k}: oracle {oracle} vs 2-(d,d) = {}\n{}",
                c.cartan.dim_b,
                wilddiag::io::to_source(input)
            )
        })?;
        ensure(c.cartan.dim_b % 2 == 0, || {
            format!("input {k}: odd dimension")
        })?;
    }
    let elapsed = start.elapsed().as_secs_f64();
    ensure(elapsed < 30.0, || format!("took {elapsed:.1}s"))
}

fn structural_properties() -> Outcome {
    for (k, input) in random_corpus(240, 11).iter().enumerate() {
        let c = compile(input).map_err(|err| format!("input {k}: {err}"))?;
        let b = c.diagram.adjacency();
        for i in 0..b.len() {
            ensure(b[i][i] % 2 == 0, || {
                format!("input {k}: B_{i}{i} = {}", b[i][i])
            })?;
            ensure((0..b.len()).all(|j| b[i][j] == b[j][i]), || {
                format!("input {k}: B not symmetric")
            })?;
        }
        let gamma =
            CycloNumber::root_of_unity(3, 1).scale(&wilddiag::Rational::new(2.into(), 3.into()));
        let scaled = compile(&input.scaled(&gamma)).map_err(|err| err.to_string())?;
        ensure(
            scaled.diagram.edge_matrix() == c.diagram.edge_matrix()
                && scaled.diagram.dims() == c.diagram.dims(),
            || format!("input {k}: scaling changed the diagram"),
        )?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for k in 0..600 {
        let a = Circle::of(&common::random_factor(&mut rng));
        let b = Circle::of(&common::random_factor(&mut rng));
        let hom = hom_class(&a, &b).map_err(|err| format!("call {k}: {err}"))?;
        let total: u64 = hom.entries().iter().map(|(c, n)| n * c.ram()).sum();
        ensure(total == a.ram() * b.ram(), || {
            format!("Hom({a}, {b}) has rank {total}")
        })?;
    }
    Ok(())
}

fn marking_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut tested = 0;
    while tested < 150 {
        let n = rand::Rng::gen_range(&mut rng, 1..=6);
        let class = common::random_class(&mut rng, n);
        let canonical = class.leg_dims();
        let reference = leg_pairing_contribution(&canonical);
        for order in common::minimal_markings(&class) {
            let dims = class
                .leg_dims_for_marking(&order)
                .ok_or_else(|| format!("{class}: marking {order:?} rejected"))?;
            ensure(dims.len() == canonical.len(), || {
                format!("{class}: {order:?} gives {dims:?}")
            })?;
            ensure(leg_pairing_contribution(&dims) == reference, || {
                format!(
                    "{class}: {order:?} gives pairing {}",
                    leg_pairing_contribution(&dims)
                )
            })?;
        }
        tested += 1;
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("1  Airy: one node, no loops, C = (2), dim 0", airy),
        ("2  Painleve I: one loop, C = (0), dim 2", painleve_one),
        ("3  Weber: A2, dim 0", weber),
        (
            "4  Painleve II: both Lax pairs give affine A1, dim 2",
            painleve_two,
        ),
        (
            "5  Bessel-Clifford: C = [[2,-2],[-2,4]], negative loop, dim 0",
            bessel_clifford,
        ),
        (
            "6  Painleve III: affine D2 Cartan matrix, central loop -1, dim 2",
            painleve_three,
        ),
        ("7  affine A1 + A1 congruent to affine D2 over Z", lemma),
        (
            "8  Painleve IV/V/VI: affine A2, A3, D4, dim 2",
            painleve_four_to_six,
        ),
        ("9  special solutions by node removal", special_solutions),
        ("10 direct dimension count = 2 - (d,d)", dimension_oracle),
        (
            "11 even loops, symmetry, Hom rank, scaling invariance",
            structural_properties,
        ),
        ("12 minimal-marking invariance of legs", marking_invariance),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("PASS  {name}  ({ms} ms)"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}  ({ms} ms): {why}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
