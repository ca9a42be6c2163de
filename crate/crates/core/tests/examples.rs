//! Runs every example program.

#[path = "../examples/finite_algebras.rs"]
mod finite_algebras;
#[path = "../examples/terms_and_rank.rs"]
mod terms_and_rank;
#[path = "../examples/pierce_spectrum.rs"]
mod pierce_spectrum;
#[path = "../examples/separability.rs"]
mod separability;
#[path = "../examples/simplicial_groups.rs"]
mod simplicial_groups;
#[path = "../examples/components.rs"]
mod components;

#[test]
fn examples_run() {
    finite_algebras::main();
    terms_and_rank::main();
    pierce_spectrum::main();
    separability::main();
    simplicial_groups::main();
    components::main();
}
