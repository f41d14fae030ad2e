use std::collections::BTreeMap;

use qhaar::algebra::parse_expr;
use qhaar::haar::algorithm::full_algorithm;
use qhaar::haar::closed::{closed_values, haar_order1, rec_cdh_bfg_ceg, rec_cdh_ceg, source_matrix_solution};
use qhaar::haar::golden::{
    golden_table, parse_scalar, source_relation_bases, source_relation_entry, REWRITE_IDENTITIES, SOURCE_LIFT,
    SOURCE_RELATIONS, WEINGARTEN,
};
use qhaar::haar::{derive_linear_relation, dq_lift_relation};
use qhaar::normalform::{enumerate_basis, std_word, Reducer};
use qhaar::qfield::Laurent;
use qhaar::{Haar, HaarTable, Method, QRational, StdExponents, Word};

fn haar() -> &'static Haar {
    static H: std::sync::OnceLock<Haar> = std::sync::OnceLock::new();
    H.get_or_init(Haar::new)
}

fn solver(m: u32) -> std::sync::Arc<HaarTable> {
    haar().table_with(m, Method::Solver).unwrap()
}

#[test]
fn published_tables() {
    for m in 1..=3 {
        let t = solver(m);
        let mut seen = 0;
        for entry in golden_table(m).unwrap() {
            for w in &entry.words {
                assert_eq!(haar().value(w).unwrap(), entry.value, "h({w})");
                if let Some(e) = t.values.keys().find(|e| std_word(e) == *w) {
                    assert_eq!(t.values[e], entry.value);
                    seen += 1;
                }
            }
        }
        assert_eq!(seen, [0, 6, 21, 53][m as usize], "order {m}");
    }
}

#[test]
fn unpublished_order_three_values_agree() {
    let a = haar().value(&Word::parse("afhbfgcdh", 3).unwrap()).unwrap();
    let b = haar().value(&Word::parse("bdkbfgcdh", 3).unwrap()).unwrap();
    assert_eq!(a, b);
    let staged = full_algorithm(haar(), 3).unwrap();
    assert_eq!(staged.table.values[&StdExponents([0, 1, 0, 1, 1, 0])], a);
}

#[test]
fn order_one_formula() {
    let t = solver(1);
    let perms: [(&str, [usize; 3]); 6] = [
        ("aek", [0, 1, 2]),
        ("afh", [0, 2, 1]),
        ("bdk", [1, 0, 2]),
        ("bfg", [1, 2, 0]),
        ("cdh", [2, 0, 1]),
        ("ceg", [2, 1, 0]),
    ];
    for (w, p) in perms {
        let w = Word::parse(w, 3).unwrap();
        let e = t.values.keys().find(|e| std_word(e) == w).unwrap();
        assert_eq!(haar_order1(&p).unwrap(), t.values[e], "{w}");
    }
    assert!(haar_order1(&[0, 0, 1]).is_err());
}

#[test]
fn rewriting_identities() {
    for (name, ids) in REWRITE_IDENTITIES {
        for (lhs, rhs) in *ids {
            let got = Reducer::shared().reduce(&Word::parse(lhs, 3).unwrap()).unwrap();
            let want = parse_expr(rhs, 3).unwrap();
            let mut got_poly = qhaar::algebra::NcPoly::<QRational>::zero();
            for (e, c) in got.iter() {
                got_poly.add_term(c.to_qrational(), std_word(e));
            }
            assert_eq!(got_poly, want, "{name}: {lhs}");
        }
    }
}

#[test]
fn source_relations_match_derived_relations() {
    for m in 2..=3 {
        let (cols, rows) = source_relation_bases(m);
        let ceg = StdExponents([0, 0, 0, 0, 0, m]);
        for ((name, entries), j) in SOURCE_RELATIONS.iter().zip(rows) {
            let r = derive_linear_relation(&ceg, &j).unwrap();
            let got = r.homogeneous_coefficients();
            for (col, template) in cols.iter().zip(entries) {
                let want = source_relation_entry(template, m).unwrap();
                let have = got.get(col).map(Laurent::to_qrational).unwrap_or_default();
                assert_eq!(have, want, "m={m} {name} column {}", col.monomial_text());
            }
            assert!(got.keys().all(|e| cols.contains(e)), "m={m} {name}");
        }
    }
}

#[test]
fn source_lift_row() {
    for m in 2..=4 {
        let (cols, _) = source_relation_bases(m);
        let r = dq_lift_relation(&StdExponents([0, 0, 0, 0, 0, m - 1])).unwrap();
        let want: BTreeMap<StdExponents, QRational> = cols
            .iter()
            .zip(SOURCE_LIFT)
            .map(|(e, c)| (*e, parse_scalar(c).unwrap()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let got: BTreeMap<StdExponents, QRational> =
            r.coefficients.iter().map(|(e, c)| (*e, c.to_qrational())).collect();
        assert_eq!(got, want, "order {m}");
    }
}

#[test]
fn weingarten_values() {
    for (expr, value, (n, d)) in WEINGARTEN {
        let p = parse_expr(expr, 3).unwrap();
        assert_eq!(haar().value_poly(&p).unwrap(), parse_scalar(value).unwrap(), "{expr}");
        let limit = haar().weingarten_limit(&p).unwrap();
        assert_eq!(limit, num_rational::BigRational::new((*n).into(), (*d).into()), "{expr}");
    }
}

#[test]
fn closed_forms_match_solver() {
    for m in 1..=4 {
        let t = solver(m);
        for (e, v) in source_matrix_solution(m).unwrap() {
            assert_eq!(t.get(&e), Some(&v), "order {m}: {}", e.monomial_text());
        }
        for (i, v) in rec_cdh_ceg(m).unwrap().into_iter().enumerate() {
            let i = i as u32;
            for e in [StdExponents([0, 0, 0, 0, i, m - i]), StdExponents([0, 0, 0, i, 0, m - i])] {
                assert_eq!(t.get(&e), Some(&v), "order {m}: {}", e.monomial_text());
            }
        }
        for (e, v) in rec_cdh_bfg_ceg(m).unwrap() {
            assert_eq!(t.get(&e), Some(&v), "order {m}: {}", e.monomial_text());
        }
        assert!(!closed_values(m).unwrap().is_empty());
    }
}

#[test]
fn staged_algorithm_matches_solver() {
    for m in 1..=4 {
        let t = solver(m);
        let staged = full_algorithm(haar(), m).unwrap();
        assert_eq!(staged.table.values, t.values, "order {m}");
        assert_eq!(staged.table.len(), enumerate_basis(m).len());
        for (e, v) in &staged.non_basis {
            assert_eq!(&haar().value(&std_word(e)).unwrap(), v, "{}", e.monomial_text());
        }
    }
}

#[test]
fn tables_round_trip_through_json() {
    let t = solver(2);
    let text = serde_json::to_string(&t.to_json()).unwrap();
    let back = HaarTable::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
    assert_eq!(back.values, t.values);
}
