//! Test support shared by the knowcard crates: a reference interpreter for
//! constraints, frozen trigonometry values, and proptest generators.

pub mod cards;
pub mod crash;
pub mod oracle;
pub mod rdfgen;
pub mod trig_table;

use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;

/// `n` values drawn from `strategy` with a fixed seed.
pub fn sample<S: Strategy>(strategy: &S, n: usize) -> Vec<S::Value> {
    let mut runner = TestRunner::deterministic();
    (0..n)
        .map(|_| {
            strategy
                .new_tree(&mut runner)
                .expect("strategy without filters")
                .current()
        })
        .collect()
}
