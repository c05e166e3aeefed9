mod common;

use std::collections::BTreeSet;

use common::{holds, mask_of, members, random_suite};
use teamenum::{parse_formula, reduce, seeds_for_level, SeedStepper, Team};

const CHAIN: &str = "vars: x1, x2, x3; dep(x1;x3) & dep(x2;x3)";

fn set(teams: &[&str]) -> BTreeSet<Team> {
    teams.iter().map(|t| Team::parse(t, 3).unwrap()).collect()
}

#[test]
fn chain_seed_sets() {
    let rf = reduce(&parse_formula(CHAIN).unwrap()).unwrap();
    let level = |k| seeds_for_level(&rf, k).unwrap().into_iter().collect::<BTreeSet<_>>();
    assert_eq!(level(1), set(&["000"]));
    assert_eq!(level(2), set(&["000,100", "000,010", "000,110", "000,111"]));
    assert_eq!(level(3), set(&["000,100,010", "000,100,110", "000,010,110"]));
    assert_eq!(level(4), set(&["000,100,010,110"]));
    assert!(level(5).is_empty());
}

/// Zero-containing seeds are exactly the satisfying teams over the free
/// variables that contain the all-zero assignment.
#[test]
fn seeds_agree_with_the_oracle() {
    for f in random_suite() {
        let rf = reduce(&f).unwrap();
        if rf.is_contradictory() {
            continue;
        }
        let w = rf.width();
        let free_formula = teamenum::Formula::new(
            // Atoms over the free variables only, rebuilt from the reduced form.
            rf.atoms()
                .iter()
                .map(|a| {
                    let (p, q) = rf.atom_names(a);
                    teamenum::Node::Dep(
                        p.into_iter().map(String::from).collect(),
                        q.into_iter().map(String::from).collect(),
                    )
                })
                .reduce(|a, b| teamenum::Node::And(Box::new(a), Box::new(b)))
                .unwrap_or(teamenum::Node::Const1),
            rf.free_vars().to_vec(),
        )
        .unwrap();
        for k in 1..=(1usize << w).min(6) {
            let expected: BTreeSet<u32> = (1u32..1 << (1 << w))
                .filter(|m| m & 1 == 1 && m.count_ones() as usize == k)
                .filter(|&m| holds(free_formula.root(), free_formula.variable_order(), &members(m)))
                .collect();
            let got: BTreeSet<u32> = seeds_for_level(&rf, k).unwrap().iter().map(mask_of).collect();
            assert_eq!(got, expected, "{f} level {k}");
        }
    }
}

#[test]
fn inner_work_is_bounded_by_previous_seeds() {
    for f in random_suite() {
        let rf = reduce(&f).unwrap();
        let Ok(mut stepper) = SeedStepper::new(&rf) else {
            continue;
        };
        let space = 1u64 << rf.width();
        let mut previous = 1u64;
        loop {
            stepper.finish().unwrap();
            assert!(stepper.inner_iterations() <= previous * space, "{f}");
            let seeds = stepper.begin_next_level().unwrap();
            previous = seeds.len() as u64;
            if seeds.is_empty() {
                break;
            }
        }
    }
}

#[test]
fn budgeted_stepping_gives_the_same_seeds() {
    let rf = reduce(&parse_formula("dep(x1;x3) & dep(x2, x3; x4)").unwrap()).unwrap();
    for budget in [1, 2, 5] {
        let mut stepper = SeedStepper::new(&rf).unwrap();
        for k in 2..=5 {
            while stepper.advance(budget).unwrap() == teamenum::seeds::Progress::Progressed {}
            let got = stepper.seeds_at_level().unwrap().teams();
            assert_eq!(got, seeds_for_level(&rf, k).unwrap(), "budget {budget} level {k}");
            stepper.begin_next_level().unwrap();
        }
    }
}
