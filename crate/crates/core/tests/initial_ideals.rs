//! Full lex completions of small minor ideals and the shape of their
//! initial ideals.

use kalvar_core::arith::RationalField;
use kalvar_core::kalman::{census_text, degree_census, stratum_generators, GeneratorSource, StratumSpec};
use kalvar_core::polyring::{buchberger_complete, normal_form, Budget, CompletionStatus, MultiPoly};

fn complete(s: usize, d: usize, n: usize) -> (Vec<MultiPoly<RationalField>>, Vec<MultiPoly<RationalField>>) {
    let spec = StratumSpec::new(s, d, n).unwrap();
    let gens = stratum_generators(&RationalField, &spec, GeneratorSource::Reduced).unwrap();
    let done = buchberger_complete(&gens, Budget::default());
    assert_eq!(done.status, CompletionStatus::Complete);
    (gens, done.basis)
}

fn squarefree_leads(basis: &[MultiPoly<RationalField>]) -> bool {
    basis.iter().all(|g| g.leading_monomial().unwrap().is_squarefree())
}

#[test]
fn two_by_two_minors_of_two_three_five_have_squarefree_initial_ideal() {
    let (gens, basis) = complete(2, 3, 5);
    assert_eq!(gens.len(), 45);
    assert_eq!(census_text(&degree_census(&basis)), "2:3 3:9 4:3");
    assert!(squarefree_leads(&basis));
    for g in &gens {
        assert!(normal_form(g, &basis).is_zero());
    }
}

#[test]
fn maximal_minors_of_one_three_five_have_non_radical_initial_ideal() {
    let (gens, basis) = complete(1, 3, 5);
    assert_eq!(gens.len(), 20);
    for g in &gens {
        assert!(normal_form(g, &basis).is_zero());
    }
    // the leading terms of a reduced basis minimally generate the initial
    // ideal, so one non-squarefree lead means it is not radical
    assert!(!squarefree_leads(&basis));
    assert_eq!(census_text(&degree_census(&basis)), "4:2 5:3 6:4");
}
