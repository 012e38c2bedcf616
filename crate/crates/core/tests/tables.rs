use std::collections::HashSet;

use foldlift::lifting::{lifting_exponent, verify_exponent};
use foldlift::{FoldingData, FoldingId, Lifter, Parabolic, Word};

fn rows_table1() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("", vec![""]),
        ("1", vec!["1", "3"]),
        ("2", vec!["2", "4"]),
        ("12", vec!["12", "32", "34"]),
        ("21", vec!["21", "23", "43"]),
        ("121", vec!["123", "321"]),
        ("212", vec!["234", "432"]),
        ("1212", vec!["1234"]),
        ("2121", vec!["4321"]),
    ]
}

fn rows_table2() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("", vec![""]),
        ("1", vec!["1", "5"]),
        ("21", vec!["21", "45"]),
        ("321", vec!["321", "345", "645"]),
        ("2321", vec!["4321", "2345"]),
        ("12321", vec!["54321", "12345"]),
        ("32321", vec!["64321"]),
        ("132321", vec!["564321"]),
        ("2132321", vec!["4564321"]),
        ("32132321", vec!["34564321"]),
        ("232132321", vec!["234564321"]),
        ("1232132321", vec!["1234564321"]),
    ]
}

fn check(id: FoldingId, p: Parabolic, rows: &[(&str, Vec<&str>)]) {
    let fd = FoldingData::build(id).unwrap();
    let mut lifter = Lifter::new(&fd);
    for (u_word, expected) in rows {
        let u = fd.folded().element_of(&Word::parse(u_word, fd.folded().rank()).unwrap()).unwrap();
        let report = lifter.liftings_of(&u, p).unwrap();
        let got: HashSet<_> = report.liftings.iter().cloned().collect();
        let want: HashSet<_> = expected
            .iter()
            .map(|w| fd.original().element_of(&Word::parse(w, fd.original().rank()).unwrap()).unwrap())
            .collect();
        assert_eq!(got, want, "{id} u={u_word}");
        for w in &report.liftings {
            let m = lifting_exponent(&fd, w, &u).unwrap();
            assert!(verify_exponent(&fd, w, &u, m, p).unwrap(), "{id} u={u_word} m={m}");
        }
    }
}

#[test]
fn table1_rows() {
    check(FoldingId::A4H2, Parabolic::empty(), &rows_table1());
}

#[test]
fn table1_longest_is_nonliftable() {
    let fd = FoldingData::build(FoldingId::A4H2).unwrap();
    let mut lifter = Lifter::new(&fd);
    for w in ["12121", "21212"] {
        let u = fd.folded().element_of(&Word::parse(w, 2).unwrap()).unwrap();
        assert!(!lifter.liftings_of(&u, Parabolic::empty()).unwrap().is_liftable());
    }
}

#[test]
fn table2_rows() {
    check(FoldingId::D6H3, Parabolic::from_one_based(&[2, 3, 4, 6]), &rows_table2());
}
