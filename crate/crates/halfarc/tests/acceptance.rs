//! Acceptance gate: one pass/fail line per criterion.

use std::collections::HashSet;
use std::time::Instant;

use halfarc::concentric::{find_concentric_tuple, is_concentric, ConcentricInstance};
use halfarc::coset::{double_coset_size, is_connected, Conclusion};
use halfarc::fp::evaluate_word;
use halfarc::group::closure_capped;
use halfarc::presets::{
    concentric_preset_names, non_concentric_preset_names, preset_concentric_tuple, preset_group,
};
use halfarc::quotient::{check_cover_multiplicity, normal_quotient};
use halfarc::suite::{
    build_d8_example_graph, conjecture_experiment, example_d8, example_d8_c2,
    example_d8_c2_with, example_h7c2, verify_d8_c2_family, Mutation,
};
use halfarc::{BigCount, PermGroup, Permutation};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn report(index: usize, name: &str, pass: bool, start: Instant) {
    println!(
        "ACCEPTANCE {index} {name} {} ({:.2?})",
        if pass { "PASS" } else { "FAIL" },
        start.elapsed()
    );
    assert!(pass, "acceptance criterion {index} ({name}) failed");
}

#[test]
fn acceptance_1_dihedral_action() {
    let start = Instant::now();
    let art = example_d8().unwrap();
    let cert = art.certificate.as_ref().unwrap();
    let order_ok = art
        .groups
        .iter()
        .find(|(n, _)| n == "X")
        .map(|(_, g)| g.order() == &BigCount::from(1_814_400u64))
        .unwrap();
    let pass = art.all_pass()
        && order_ok
        && cert.generation_ok
        && cert.intersection_index == 2
        && cert.asymmetry_ok
        && cert.valency == 4
        && cert.conclusion == Conclusion::HalfArcTransitiveAction;
    report(1, "dihedral_action_certificate", pass, start);
}

#[test]
fn acceptance_2_dihedral_graph() {
    let start = Instant::now();
    let g = build_d8_example_graph(5_000_000).unwrap();
    let pass = g.vertex_count() == 226_800 && g.valency() == 4 && g.is_regular() && is_connected(&g);
    report(2, "dihedral_graph_226800", pass, start);
}

#[test]
fn acceptance_3_degree_256_action() {
    let start = Instant::now();
    let art = example_h7c2().unwrap();
    let y_order = art
        .groups
        .iter()
        .find(|(n, _)| n == "Y")
        .map(|(_, g)| g.order_u64())
        .unwrap();
    let pass = art.all_pass() && y_order == Some(256);
    report(3, "degree_256_action", pass, start);
}

#[test]
fn acceptance_4_family_double_cosets() {
    let start = Instant::now();
    let mut pass = true;
    for m in 4..=8 {
        let art = example_d8_c2(m).unwrap();
        let named = |name: &str| {
            art.checks
                .iter()
                .find(|c| c.name == name)
                .map_or(false, |c| c.pass)
        };
        pass &= named("involutions")
            && named("even_parity")
            && named("fingerprints")
            && named("decomposition_forward")
            && named("decomposition_backward")
            && named("union_size");
        if !pass {
            eprintln!("m = {m}:\n{}", art.report());
            break;
        }
    }
    report(4, "family_double_cosets_m4_to_m8", pass, start);
}

#[test]
fn acceptance_5_family_local_verification() {
    let start = Instant::now();
    let mut pass = true;
    for m in 4..=8 {
        let art = verify_d8_c2_family(m).unwrap();
        if !art.all_pass() {
            eprintln!("m = {m}:\n{}", art.report());
            pass = false;
            break;
        }
    }
    report(5, "family_local_verification_m4_to_m8", pass, start);
}

#[test]
fn acceptance_6_classification_list() {
    let start = Instant::now();
    let budget = 1 << 24;
    let mut pass = true;

    for name in concentric_preset_names() {
        let (g, gens) = preset_group(name).unwrap();
        let m = g.order_u64().unwrap().trailing_zeros() as usize;
        let ok = match preset_concentric_tuple(name).unwrap() {
            // shipped tuple (defining or constructed): verify it
            Some(words) => {
                let tuple: Vec<Permutation> = words
                    .iter()
                    .map(|w| evaluate_word(w, &gens, g.degree()).unwrap())
                    .collect();
                let inst = ConcentricInstance::new(g, tuple).unwrap();
                is_concentric(&inst).unwrap().verdict
            }
            // no shipped tuple: search must find one
            None => find_concentric_tuple(&g, m, budget).unwrap().is_some(),
        };
        if !ok {
            eprintln!("expected a tuple for {name}");
            pass = false;
        }
    }

    for name in non_concentric_preset_names() {
        let (g, _) = preset_group(name).unwrap();
        let order = g.order_u64().unwrap();
        assert!(order <= 32, "{name} is not desk-scale for exhaustion");
        let m = order.trailing_zeros() as usize;
        match find_concentric_tuple(&g, m, budget) {
            Ok(None) => {}
            Ok(Some(_)) => {
                eprintln!("unexpected tuple for {name}");
                pass = false;
            }
            Err(e) => {
                eprintln!("search did not complete for {name}: {e}");
                pass = false;
            }
        }
    }
    report(6, "classification_list_both_directions", pass, start);
}

#[test]
fn acceptance_7_shifted_family_experiment() {
    let start = Instant::now();
    // m = 7: all conditions expected true, cross-validated against the
    // independent order-128 preset
    let art7 = conjecture_experiment(7).unwrap();
    let mut pass = art7.all_pass();

    let (h7, h7_tuple) = preset_group("H7").unwrap();
    let y7 = &art7.groups.iter().find(|(n, _)| n == "Y").unwrap().1;
    pass &= h7.order() == y7.order();
    let commutes = |a: &Permutation, b: &Permutation| {
        a.compose(b).unwrap() == b.compose(a).unwrap()
    };
    let exp_tuple = y7.generators();
    pass &= h7_tuple.len() == exp_tuple.len();
    for i in 0..h7_tuple.len() {
        pass &= h7_tuple[i].order() == exp_tuple[i].order();
        for j in 0..h7_tuple.len() {
            pass &= commutes(&h7_tuple[i], &h7_tuple[j]) == commutes(&exp_tuple[i], &exp_tuple[j]);
        }
    }

    // m = 8: the report must exist with every condition valued; its truth
    // is an observation, not an assertion
    let art8 = conjecture_experiment(8).unwrap();
    let line_count = art8.report().lines().count();
    pass &= line_count >= 8
        && art8
            .report()
            .lines()
            .all(|l| l.contains(" PASS ") || l.contains(" FAIL "));
    println!("experiment m=8 observations:\n{}", art8.report());
    report(7, "shifted_family_experiment", pass, start);
}

#[test]
fn acceptance_8_property_suites() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut pass = true;

    // BSGS order vs brute-force closure, plus the orbit-stabilizer identity,
    // on 100 random generator sets of degree <= 8
    let mut compared = 0;
    while compared < 100 {
        let degree = rng.gen_range(3..=8usize);
        let gens: Vec<Permutation> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let mut images: Vec<u32> = (0..degree as u32).collect();
                images.shuffle(&mut rng);
                Permutation::from_images(images).unwrap()
            })
            .collect();
        let Some(closure) = closure_capped(degree, &gens, 5000) else {
            continue;
        };
        let g = PermGroup::from_generators(degree, &gens).unwrap();
        pass &= g.order_u64() == Some(closure.len() as u64);
        let orbit = g.orbit(0).unwrap();
        let stab = g.stabilizer(0).unwrap();
        pass &= BigCount::from(orbit.len()) * stab.order() == *g.order();
        compared += 1;
    }

    // double cosets partition the whole group
    for (x, y_gens) in [
        (
            symmetric(6),
            vec![Permutation::from_cycles(&[vec![0, 1, 2, 3, 4, 5]], 6).unwrap()],
        ),
        (
            alternating7(),
            vec![Permutation::from_cycles(&[vec![0, 1, 2, 3, 4, 5, 6]], 7).unwrap()],
        ),
    ] {
        let y = PermGroup::from_generators(x.degree(), &y_gens).unwrap();
        pass &= double_cosets_partition(&x, &y);
    }

    // cover multiplicity is constant on synthetic Cayley/normal-subgroup
    // pairs
    let mut pairs = 0;
    for n in [6u32, 8, 9, 10, 12, 14, 15, 16, 18, 20] {
        for k in 2..n {
            if n % k != 0 || pairs >= 20 {
                continue;
            }
            let edges: Vec<(u32, u32)> = (0..n)
                .map(|i| (i, (i + 1) % n))
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            let cycle = halfarc::coset::CosetGraph::from_edges(n as usize, &edges, vec![]).unwrap();
            let rot =
                Permutation::from_images((0..n).map(|i| (i + k) % n).collect()).unwrap();
            let q = normal_quotient(&cycle, &[rot]).unwrap();
            pass &= check_cover_multiplicity(&q);
            pairs += 1;
        }
    }
    assert_eq!(pairs, 20);

    // every single-entry perturbation of the family construction data is
    // caught by at least one check
    for u in 0..16u32 {
        for v in (u + 1)..16 {
            for mutation in [Mutation::SwapX(u, v), Mutation::SwapY(u, v)] {
                let art = example_d8_c2_with(4, Some(mutation)).unwrap();
                if art.all_pass() {
                    eprintln!("undetected mutation {mutation:?}");
                    pass = false;
                }
            }
        }
    }

    report(8, "property_suites", pass, start);
}

fn symmetric(degree: usize) -> PermGroup {
    let t = Permutation::from_cycles(&[vec![0, 1]], degree).unwrap();
    let c = Permutation::from_cycles(&[(0..degree as u32).collect()], degree).unwrap();
    PermGroup::from_generators(degree, &[t, c]).unwrap()
}

fn alternating7() -> PermGroup {
    let t = Permutation::from_cycles(&[vec![0, 1, 2]], 7).unwrap();
    let c = Permutation::from_cycles(&[(0..7).collect()], 7).unwrap();
    PermGroup::from_generators(7, &[t, c]).unwrap()
}

/// Marks every element of `x` with its double coset and checks that the
/// class sizes match the index formula and sum to |X|.
fn double_cosets_partition(x: &PermGroup, y: &PermGroup) -> bool {
    let elements = x.enumerate_elements(1 << 16).unwrap();
    let y_elems = y.enumerate_elements(1 << 16).unwrap();
    let mut assigned: HashSet<Permutation> = HashSet::new();
    let mut total = 0u64;
    for g in &elements {
        if assigned.contains(g) {
            continue;
        }
        let mut class = HashSet::new();
        for y1 in &y_elems {
            for y2 in &y_elems {
                class.insert(y1.compose(g).unwrap().compose(y2).unwrap());
            }
        }
        let size = double_coset_size(y, g).unwrap();
        if BigCount::from(class.len()) != size {
            return false;
        }
        total += class.len() as u64;
        assigned.extend(class);
    }
    BigCount::from(total) == *x.order()
}
