use hom_leibniz::dialg::{
    check_admissible, check_left_dialgebra, check_right_dialgebra, dialgebra_from_lm_unchecked,
    Dialgebra,
};
use hom_leibniz::homcore::HomSpace;
use hom_leibniz::lmcat::check_lm_object;
use hom_leibniz::report::CheckReport;
use hom_leibniz::tensor::Multilinear;
use hom_leibniz::zoo;
use serde_json::Value;

fn golden() -> Value {
    serde_json::from_str(include_str!("golden/axioms.json")).unwrap()
}

/// `None` when the item passes, else its witness tuple.
fn verdict(rep: &CheckReport, name: &str) -> Option<Vec<usize>> {
    let item = rep.item(name).unwrap_or_else(|| panic!("no item {name}"));
    if item.passed {
        None
    } else {
        Some(item.witness.as_ref().unwrap().tuple.clone())
    }
}

fn expected(v: &Value) -> Option<Vec<usize>> {
    v.as_array().map(|a| a.iter().map(|x| x.as_u64().unwrap() as usize).collect())
}

fn dialgebra(dashv: Multilinear, vdash: Multilinear) -> Dialgebra {
    Dialgebra::new(HomSpace::identity("e", 2), dashv, vdash).unwrap()
}

fn compare(d: &Dialgebra, want: &Value) {
    let reps = [check_admissible(d), check_left_dialgebra(d), check_right_dialgebra(d)];
    for (name, w) in want.as_object().unwrap() {
        for rep in &reps {
            if rep.item(name).is_some() {
                assert_eq!(verdict(rep, name), expected(w), "{name}");
            }
        }
    }
}

#[test]
fn two_dimensional_cases_match_the_reference() {
    let g = golden();
    let zero = Multilinear::zeros(&[2, 2], 2);
    let (l2, la, r2) = (zoo::l2().product, zoo::leibniz_a().product, zoo::r2().product);
    let cases = [
        ("l2-vdash-only", dialgebra(zero.clone(), l2.clone())),
        ("l2-dashv-only", dialgebra(l2, zero.clone())),
        ("leibniz-a-vdash-only", dialgebra(zero.clone(), la.clone())),
        ("leibniz-a-dashv-only", dialgebra(la.clone(), zero)),
        ("r2-both", dialgebra(r2.clone(), r2.clone())),
        ("r2-vdash-leibniz-a-dashv", dialgebra(la, r2)),
    ];
    for (name, d) in &cases {
        compare(d, &g[*name]);
    }
}

#[test]
fn tensor_square_matches_the_reference() {
    let want = &golden()["tensor-square-l2"];
    let o = zoo::tensor_square_l2();
    let rep = check_lm_object(&o);
    for name in ["L1", "L2", "L3", "anchor-left", "anchor-right"] {
        let key = if name.starts_with('L') { format!("module/{name}") } else { name.to_string() };
        assert_eq!(verdict(&rep, &key), expected(&want[name]), "{name}");
    }
    compare(&dialgebra_from_lm_unchecked(&o), &want["dialgebra"]);
}
