//! The acceptance gate: twelve criteria, one PASS/FAIL line each.
//!
//! Lines are written straight to stdout so they show up even when the
//! harness captures test output.

mod common;

use std::collections::{BTreeSet, HashSet};
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};

use common::golden::{cases, golden_dir, run_case};
use common::{random_deterministic, random_nondeterministic, random_pathset, random_pathsets, rng};
use pathset::decimation::{decimation_presentation, shift_presentation};
use pathset::factorization::equals_envelope;
use pathset::oracle::{blocks_decimate, blocks_interleave, blocks_of};
use pathset::{
    complete_factorization, equals, factor_set, factorization_exponent, fixtures,
    full_decimation_set, interleave, interleave_product, interleaving_closure, interleaving_factors,
    is_leveled, is_n_factorizable, minimize, psi, self_loop_criterion, shift, weak_shift_orbit,
    DecimationIndex, FactorizationExponent, NodeStatus, PathSet, Presentation,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn names(p: &Presentation) -> BTreeSet<(String, String, String)> {
    p.edges()
        .iter()
        .map(|e| {
            (
                p.vertex_name(e.source).to_string(),
                p.alphabet().name(e.symbol).to_string(),
                p.vertex_name(e.target).to_string(),
            )
        })
        .collect()
}

fn ac1_full_shift_pair() -> Outcome {
    let (a, b) = fixtures::full_shift_pair();
    let product = interleave_product(&[a, b]);
    ensure!(product.num_vertices() == 2, "{} product states", product.num_vertices());
    ensure!(
        names(&product) == names(&fixtures::full_shift_double_cover()),
        "product edges differ from the two-state double cover"
    );
    let m = minimize(&product);
    ensure!(m.num_vertices() == 1, "minimized to {} states", m.num_vertices());
    ensure!(m == minimize(&fixtures::f2()), "minimized product is not the full shift");
    Ok("2 product states, minimal form is the 1-state full shift".into())
}

fn ac2_q_product() -> Outcome {
    let product = interleave_product(&[fixtures::q0(), fixtures::q1()]);
    ensure!(product.num_vertices() == 7, "{} product states", product.num_vertices());
    ensure!(names(&product) == names(&fixtures::q_product_raw()), "product edges differ from fixture");
    let m = minimize(&product);
    ensure!(m.num_vertices() == 6, "minimized to {} states", m.num_vertices());
    ensure!(m == minimize(&fixtures::q_product_minimal()), "minimal form differs from fixture");
    ensure!(equals(&psi(&m, 0, 2), &minimize(&fixtures::q0())), "even decimation is not Q0");
    ensure!(equals(&psi(&m, 1, 2), &minimize(&fixtures::q1())), "odd decimation is not Q1");
    Ok("7 product states, 6 minimal, factors recovered".into())
}

fn ac3_closure_identities() -> Outcome {
    let sets = random_pathsets(3, 200, 5, 3);
    for (i, p) in sets.iter().enumerate() {
        for n in 1..=4 {
            let closure = interleaving_closure(p, n);
            ensure!(
                p.initial_blocks(8).is_subset(&closure.initial_blocks(8)),
                "instance {i}, n={n}: P not contained in its closure"
            );
            ensure!(interleaving_closure(&closure, n) == closure, "instance {i}, n={n}: closure not idempotent");
            for j in 0..n {
                ensure!(
                    psi(&closure, j, n) == psi(p, j, n),
                    "instance {i}: closure changes decimation ({j},{n})"
                );
            }
        }
    }
    Ok(format!("{} instances, n <= 4", sets.len()))
}

fn ac4_oracle_differential() -> Outcome {
    let mut r = rng(4);
    for i in 0..500 {
        let p = random_pathset(&mut r, 5, 3);
        // Total block depth is kept within what brute-force enumeration
        // handles: 12 letters over two symbols, 8 over three.
        let budget = if p.alphabet().len() <= 2 { 12 } else { 8 };
        for n in 1..=4 {
            for j in 0..n {
                let d = ((budget - j) / n).min(6);
                let oracle = blocks_decimate(&blocks_of(p.presentation(), j + n * d), j, n).unwrap();
                ensure!(
                    psi(&p, j, n).initial_blocks(d) == oracle.to_set(),
                    "instance {i}: decimation ({j},{n}) at depth {d}"
                );
            }
        }

        let count = 1 + i % 3;
        let parts: Vec<PathSet> = (0..count).map(|_| random_pathset(&mut r, 4, 3)).collect();
        let alphabet = parts.iter().skip(1).fold(parts[0].alphabet().clone(), |a, c| a.union(c.alphabet()));
        let parts: Vec<PathSet> = parts.iter().map(|c| c.relabel(&alphabet)).collect();
        let budget = if alphabet.len() <= 2 { 15 } else { 10 };
        let l = (budget / count).min(5);
        let blocks: Vec<_> = parts.iter().map(|c| blocks_of(c.presentation(), l)).collect();
        let oracle = blocks_interleave(&blocks).unwrap();
        ensure!(
            interleave(&parts).initial_blocks(count * l) == oracle.to_set(),
            "instance {i}: interleaving of {count} at depth {l}"
        );
    }
    Ok("500 instances, decimation and interleaving laws".into())
}

fn ac5_size_bounds() -> Outcome {
    let mut r = rng(5);
    for i in 0..300 {
        let raw = random_nondeterministic(&mut r, 5, 3);
        let d = raw.determinize();
        ensure!(d.num_vertices() < 1 << raw.num_vertices(), "instance {i}: determinize {}", d.num_vertices());

        let p = random_pathset(&mut r, 5, 3);
        let m = p.num_vertices();
        for j in 0..=6 {
            ensure!(shift_presentation(&p, j).num_vertices() <= m + 1, "instance {i}: shift {j}");
        }
        for n in 1..=4 {
            for j in 0..=6 {
                let raw = decimation_presentation(&p, DecimationIndex::new(j, n).unwrap());
                ensure!(raw.num_vertices() <= m + 1, "instance {i}: raw decimation ({j},{n})");
                ensure!(psi(&p, j, n).num_vertices() < 1 << (m + 1), "instance {i}: decimation ({j},{n})");
            }
        }

        let parts: Vec<Presentation> = (0..1 + i % 3).map(|_| random_deterministic(&mut r, 3, 2)).collect();
        let bound = parts.len() * parts.iter().map(|c| c.num_vertices()).product::<usize>();
        ensure!(interleave_product(&parts).num_vertices() <= bound, "instance {i}: product size");

        let leveled = is_leveled(&p).unwrap().is_some();
        for n in 2..=4 {
            if let Ok(factors) = interleaving_factors(&p, n) {
                for f in factors {
                    ensure!(f.num_vertices() <= m, "instance {i}: factor larger than m");
                    ensure!(leveled || f.num_vertices() < m, "instance {i}: non-leveled factor not smaller");
                }
            }
        }
    }
    Ok("300 instances".into())
}

fn ac6_dichotomy() -> Outcome {
    let sets = random_pathsets(6, 200, 6, 3);
    for (i, p) in sets.iter().enumerate() {
        let leveled = is_leveled(p).unwrap().is_some();
        let envelope = equals_envelope(p).unwrap();
        let all = (1..=5).all(|n| is_n_factorizable(p, n));
        ensure!(leveled == envelope && envelope == all, "instance {i}: {leveled} {envelope} {all}");
        if let FactorizationExponent::Finite(f) = factorization_exponent(p).unwrap() {
            let levels: Vec<usize> = (1..=8).filter(|&n| is_n_factorizable(p, n)).collect();
            let divisors: Vec<usize> = (1..=f).filter(|n| f % n == 0).collect();
            ensure!(levels == divisors, "instance {i}: levels {levels:?} vs divisors of {f}");
        }
    }
    Ok(format!("{} instances, m <= 6", sets.len()))
}

fn ac7_c2_factor_set() -> Outcome {
    let c2 = minimize(&fixtures::c2());
    let single = |cycle: &[&str]| {
        let vertices: Vec<String> = (0..cycle.len()).map(|i| format!("s{i}")).collect();
        let refs: Vec<&str> = vertices.iter().map(String::as_str).collect();
        let edges: Vec<(&str, &str, &str)> =
            (0..cycle.len()).map(|i| (refs[i], cycle[i], refs[(i + 1) % cycle.len()])).collect();
        minimize(&Presentation::build(&["0", "1"], &refs, refs[0], &edges).unwrap())
    };
    let expected: HashSet<PathSet> = [single(&["0", "1"]), single(&["1", "0"]), single(&["0"]), single(&["1"])].into();
    let got: HashSet<PathSet> = factor_set(&c2).unwrap().into_iter().collect();
    ensure!(got == expected, "factor set has {} elements", got.len());
    let target = single(&["1", "0"]);
    let first = (1..=3).find(|&n| (0..n).any(|j| psi(&c2, j, n) == target));
    ensure!(first == Some(3), "(10)^inf first appears at n = {first:?}");
    Ok("4 factors, (10)^inf first at n = 3".into())
}

fn ac8_factorization_trees() -> Outcome {
    let q = interleave(&[minimize(&fixtures::q0()), minimize(&fixtures::q1())]);
    let tree = complete_factorization(&q).unwrap();
    let NodeStatus::Factored { n: 2, children } = tree.status() else {
        return Err("root is not a 2-fold factorization".into());
    };
    ensure!(children.len() == 2, "{} children", children.len());
    ensure!(children[0].status() == &NodeStatus::Indecomposable, "first child not indecomposable");
    ensure!(matches!(children[1].status(), NodeStatus::FrozenLeveled(_)), "second child not leveled");

    let sets = random_pathsets(8, 200, 6, 3);
    for (i, p) in sets.iter().chain([&q]).enumerate() {
        let tree = complete_factorization(p).unwrap();
        let m = p.num_vertices();
        ensure!(tree.depth() < m.max(1), "instance {i}: depth {}", tree.depth());
        let bound: usize = (1..m).product();
        ensure!(tree.leaf_count() <= bound, "instance {i}: {} leaves", tree.leaf_count());
        for node in tree.nodes() {
            if let NodeStatus::Factored { children, .. } = node.status() {
                let values: Vec<PathSet> = children.iter().map(|c| c.value().clone()).collect();
                ensure!(&interleave(&values) == node.value(), "instance {i}: children do not reproduce node");
            }
        }
    }
    Ok(format!("Factored(2, [Indecomposable, Frozen-Leveled]); {} random trees", sets.len()))
}

fn ac9_self_interleaving() -> Outcome {
    let sets = random_pathsets(9, 500, 5, 3);
    let mut checked = 0;
    for (i, p) in sets.iter().enumerate() {
        if !self_loop_criterion(p).unwrap() {
            continue;
        }
        for n in 2..=4 {
            if let Ok(factors) = interleaving_factors(p, n) {
                checked += 1;
                ensure!(factors.windows(2).all(|w| w[0] == w[1]), "instance {i}: distinct factors at n={n}");
            }
        }
    }
    Ok(format!("{checked} factorizations with an initial self-loop"))
}

fn ac10_weak_shift_orbit() -> Outcome {
    let sets = random_pathsets(10, 500, 5, 3);
    for (i, p) in sets.iter().enumerate() {
        let (j, k) = weak_shift_orbit(p).unwrap();
        ensure!(j < k, "instance {i}: ({j},{k})");
        let shifts: Vec<PathSet> = (0..=k).map(|t| shift(p, t)).collect();
        ensure!(equals(&shifts[j], &shifts[k]), "instance {i}: S^{j} != S^{k}");
        let distinct: HashSet<&PathSet> = shifts[..k].iter().collect();
        ensure!(distinct.len() == k, "instance {i}: an earlier repeat exists");
    }
    Ok(format!("{} instances", sets.len()))
}

fn ac11_full_decimation_set() -> Outcome {
    let sets = random_pathsets(11, 200, 4, 3);
    for (i, p) in sets.iter().enumerate() {
        let d = full_decimation_set(p).unwrap();
        let mut grid = HashSet::new();
        for j in 0..=6 {
            for n in 1..=6 {
                let s = psi(p, j, n);
                ensure!(d.contains(&s), "instance {i}: ({j},{n}) not certified");
                grid.insert(s);
            }
        }
        for j in 0..d.max_offset() {
            for n in 1..=d.max_step() {
                grid.insert(psi(p, j, n));
            }
        }
        for (member, _) in d.members() {
            ensure!(grid.contains(member), "instance {i}: certified member outside the grid");
        }
    }
    Ok(format!("{} instances, m <= 4", sets.len()))
}

fn ac12_cli_golden() -> Outcome {
    let all = cases();
    for case in &all {
        let (status, out, _) = run_case(case);
        let expected = std::fs::read_to_string(golden_dir().join("expected").join(format!("{}.out", case.name)))
            .map_err(|e| format!("{}: {e}", case.name))?;
        ensure!(status == case.status, "{}: exit {status}", case.name);
        ensure!(out == expected, "{}: output differs", case.name);
        if status == 0 && out.starts_with("alphabet:") {
            let back = pathset::graphfile::read(&out).map_err(|e| format!("{}: {e}", case.name))?;
            ensure!(pathset::graphfile::write(&back) == out, "{}: graph file does not round-trip", case.name);
        }
    }
    for file in ["f2.pg", "gm.pg", "c2.pg", "q0.pg", "q1.pg", "q_product_raw.pg", "nd.pg"] {
        let text = std::fs::read_to_string(golden_dir().join(file)).map_err(|e| format!("{file}: {e}"))?;
        let p = pathset::graphfile::read(&text).map_err(|e| format!("{file}: {e}"))?;
        ensure!(pathset::graphfile::read(&pathset::graphfile::write(&p)) == Ok(p), "{file}: round-trip");
    }
    Ok(format!("{} golden commands, graph files round-trip", all.len()))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 12] = [
        ("AC1 full-shift pair interleaving product", ac1_full_shift_pair),
        ("AC2 Q0/Q1 interleaving product and factors", ac2_q_product),
        ("AC3 closure inclusion, idempotence, decimation identity", ac3_closure_identities),
        ("AC4 oracle differential laws", ac4_oracle_differential),
        ("AC5 size bounds", ac5_size_bounds),
        ("AC6 dichotomy and exponent divisors", ac6_dichotomy),
        ("AC7 C2 factor set and sharpness", ac7_c2_factor_set),
        ("AC8 complete factorization trees", ac8_factorization_trees),
        ("AC9 self-interleaving criterion", ac9_self_interleaving),
        ("AC10 weak shift-invariance", ac10_weak_shift_orbit),
        ("AC11 full decimation set certificate", ac11_full_decimation_set),
        ("AC12 CLI golden files", ac12_cli_golden),
    ];
    let mut stdout = std::io::stdout();
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let line = match &outcome {
            Ok(detail) => format!("[PASS] {name}: {detail}\n"),
            Err(why) => {
                failed.push(name);
                format!("[FAIL] {name}: {why}\n")
            }
        };
        stdout.write_all(line.as_bytes()).unwrap();
    }
    stdout.flush().unwrap();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
