use linial_core::suite::{run_all, CRITERIA};

#[test]
fn acceptance_criteria() {
    let outcomes = run_all();
    assert_eq!(outcomes.len(), CRITERIA.len());
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed: Vec<String> = outcomes.iter().filter(|o| !o.passed).map(|o| o.line()).collect();
    assert!(failed.is_empty(), "failing criteria:\n{}", failed.join("\n"));
}
