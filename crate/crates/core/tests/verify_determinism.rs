use hklat::verify::{check, run_all, CheckParams, CHECK_IDS};

#[test]
fn reports_repeat_exactly_for_equal_seeds() {
    let a: Vec<_> = run_all(&[3], 11).unwrap().iter().map(|r| r.without_runtime().to_json_line()).collect();
    let b: Vec<_> = run_all(&[3], 11).unwrap().iter().map(|r| r.without_runtime().to_json_line()).collect();
    assert_eq!(a, b);
    assert_eq!(a.len(), CHECK_IDS.len());
}

#[test]
fn every_check_passes_with_another_seed() {
    for id in CHECK_IDS {
        let params = CheckParams { n: if id == "remark-8.5" { None } else { Some(5) }, seed: Some(12345), samples: Some(10), height: None };
        let r = check(id, &params).unwrap();
        assert!(r.pass, "{}", r.to_json_line());
        assert!(r.counterexample.is_none());
    }
}
