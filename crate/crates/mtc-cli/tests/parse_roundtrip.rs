//! Parser unit tests and the render/parse round-trip property.

use mtc::liealg::Series;
use mtc_cli::expr::{
    eval, eval_ring, parse, Built, BuildError, CatExpr, EvalError, ParseError, SeriesName,
};
use proptest::prelude::*;

fn qg(name: SeriesName, level: u32) -> CatExpr {
    CatExpr::Qg { name, level }
}

#[test]
fn parses_a_plain_atom() {
    assert_eq!(parse("qg(g2,3)").unwrap(), qg(SeriesName::G2, 3));
    assert_eq!(parse("qg(sl2,10)").unwrap(), qg(SeriesName::Sl(2), 10));
}

#[test]
fn parses_nested_functions() {
    let got = parse("gauge2(adj(qg(sl2,5)))").unwrap();
    let want = CatExpr::Gauge2(Box::new(CatExpr::Adj {
        inner: Box::new(qg(SeriesName::Sl(2), 5)),
        generator: None,
    }));
    assert_eq!(got, want);
}

#[test]
fn parses_the_product_pipeline() {
    let got = parse("gauge2(rev(adj(qg(sl2,3))) * rev(adj(qg(sl2,3))))").unwrap();
    let factor = || {
        CatExpr::Rev(Box::new(CatExpr::Adj {
            inner: Box::new(qg(SeriesName::Sl(2), 3)),
            generator: None,
        }))
    };
    let want = CatExpr::Gauge2(Box::new(CatExpr::Prod(Box::new(factor()), Box::new(factor()))));
    assert_eq!(got, want);
    assert_eq!(got.render(), "gauge2(rev(adj(qg(sl2,3))) * rev(adj(qg(sl2,3))))");
}

#[test]
fn products_associate_to_the_left() {
    let got = parse("qg(sl2,1) * qg(sl2,2) * qg(sl2,3)").unwrap();
    let want = CatExpr::Prod(
        Box::new(CatExpr::Prod(
            Box::new(qg(SeriesName::Sl(2), 1)),
            Box::new(qg(SeriesName::Sl(2), 2)),
        )),
        Box::new(qg(SeriesName::Sl(2), 3)),
    );
    assert_eq!(got, want);
}

#[test]
fn parses_generator_specifiers() {
    let got = parse("adj(qg(sl2,5),gen=4L1)").unwrap();
    let want = CatExpr::Adj {
        inner: Box::new(qg(SeriesName::Sl(2), 5)),
        generator: Some("4L1".to_string()),
    };
    assert_eq!(got, want);
}

#[test]
fn tolerates_whitespace_between_tokens() {
    assert_eq!(parse("  qg ( sl2 , 3 )  ").unwrap(), qg(SeriesName::Sl(2), 3));
    assert_eq!(
        parse("rev( qg(sl2,1) ) * qg(g2,1)").unwrap(),
        CatExpr::Prod(
            Box::new(CatExpr::Rev(Box::new(qg(SeriesName::Sl(2), 1)))),
            Box::new(qg(SeriesName::G2, 1)),
        )
    );
}

#[test]
fn algebra_names_resolve_to_series_and_rank() {
    let cases = [
        (SeriesName::Sl(2), Series::A, 1),
        (SeriesName::Sl(4), Series::A, 3),
        (SeriesName::So(5), Series::B, 2),
        (SeriesName::So(7), Series::B, 3),
        (SeriesName::So(6), Series::D, 3),
        (SeriesName::So(8), Series::D, 4),
        (SeriesName::Sp(4), Series::C, 2),
        (SeriesName::Sp(6), Series::C, 3),
        (SeriesName::G2, Series::G2, 2),
    ];
    for (name, series, rank) in cases {
        let spec = name.to_spec(7);
        assert_eq!((spec.series, spec.rank, spec.level), (series, rank, 7), "{name}");
    }
}

#[test]
fn unknown_algebras_fail_with_the_name_offset() {
    for (text, offset, name) in [
        ("qg(e8,2)", 3, "e8"),
        ("qg(sp3,1)", 3, "sp3"),
        ("qg(sl0,1)", 3, "sl0"),
        ("rev(qg(su2,4))", 7, "su2"),
    ] {
        match parse(text) {
            Err(ParseError::UnknownSeries { offset: at, name: got }) => {
                assert_eq!((at, got.as_str()), (offset, name), "{text}");
            }
            other => panic!("{text}: expected UnknownSeries, got {other:?}"),
        }
    }
}

#[test]
fn extra_arguments_are_arity_errors() {
    for (text, offset) in [
        ("qg(sl2,2,3)", 8),
        ("rev(qg(sl2,1),qg(sl2,1))", 13),
        ("gauge2(qg(sl2,1),qg(sl2,1))", 16),
        ("adj(qg(sl2,5),gen=4L1,gen=2L1)", 21),
    ] {
        match parse(text) {
            Err(ParseError::Arity { offset: at, .. }) => assert_eq!(at, offset, "{text}"),
            other => panic!("{text}: expected ArityError, got {other:?}"),
        }
    }
}

#[test]
fn syntax_errors_carry_byte_offsets() {
    for (text, offset) in [
        ("", 0),
        ("foo(qg(sl2,1))", 0),
        ("qg(sl2,)", 7),
        ("qg(sl2,1))", 9),
        ("qg(sl2,1) *", 11),
        ("adj(qg(sl2,3),4L1)", 14),
        ("adj(qg(sl2,3),gen=)", 18),
    ] {
        match parse(text) {
            Err(ParseError::Syntax { offset: at, .. }) => assert_eq!(at, offset, "{text}"),
            other => panic!("{text}: expected SyntaxError, got {other:?}"),
        }
    }
}

#[test]
fn default_adjoint_generator_is_the_highest_root_label() {
    // For sl2 the highest root is twice the fundamental weight, so the
    // default adj generator is 2L1 and adj(qg(sl2,5)) is its even part.
    let built = eval(&parse("adj(qg(sl2,5))").unwrap(), 1e-6).unwrap();
    let Built::Category(md) = built else { panic!("adj yields a category") };
    assert_eq!(md.labels, vec!["0", "2L1", "4L1"]);
}

#[test]
fn generator_labels_are_validated() {
    let err = eval(&parse("adj(qg(sl2,5),gen=L9)").unwrap(), 1e-6).unwrap_err();
    match err {
        BuildError::Eval(EvalError::UnknownLabel { label }) => assert_eq!(label, "L9"),
        other => panic!("expected UnknownLabel, got {:?}", kind_of(&other)),
    }
}

#[test]
fn default_generator_requires_a_quantum_group_atom() {
    for text in ["adj(qg(sl2,3) * qg(sl2,3))", "adj(rev(qg(sl2,3)))"] {
        let err = eval(&parse(text).unwrap(), 1e-6).unwrap_err();
        match err {
            BuildError::Eval(EvalError::MissingGenerator) => {}
            other => panic!("{text}: expected MissingGenerator, got {:?}", kind_of(&other)),
        }
    }
}

#[test]
fn gauged_rings_cannot_feed_category_operations() {
    for text in [
        "rev(gauge2(qg(sl2,1)))",
        "adj(gauge2(qg(sl2,1)),gen=0)",
        "gauge2(gauge2(qg(sl2,1)))",
        "qg(sl2,1) * gauge2(qg(sl2,1))",
    ] {
        let err = eval(&parse(text).unwrap(), 1e-6).unwrap_err();
        match err {
            BuildError::Eval(EvalError::Type { .. }) => {}
            other => panic!("{text}: expected a type error, got {:?}", kind_of(&other)),
        }
    }
}

#[test]
fn eval_ring_handles_both_value_kinds() {
    let plain = eval_ring(&parse("qg(sl2,2)").unwrap(), 1e-6).unwrap();
    assert_eq!(plain.rank(), 3);
    let gauged = eval_ring(&parse("gauge2(qg(sl2,1))").unwrap(), 1e-6).unwrap();
    assert_eq!(gauged.rank(), 9);
}

fn kind_of(e: &BuildError) -> String {
    match e {
        BuildError::Eval(ev) => ev.kind().to_string(),
        BuildError::Math(me) => me.to_string(),
    }
}

// ---------------------------------------------------------------------
// Round-trip property
// ---------------------------------------------------------------------

fn series_strategy() -> impl Strategy<Value = SeriesName> {
    prop_oneof![
        (1u32..=6).prop_map(SeriesName::Sl),
        (1u32..=9).prop_map(SeriesName::So),
        (1u32..=4).prop_map(|n| SeriesName::Sp(2 * n)),
        Just(SeriesName::G2),
    ]
}

fn generator_strategy() -> impl Strategy<Value = Option<String>> {
    prop_oneof![
        3 => Just(None),
        2 => prop::string::string_regex("[A-Za-z0-9+]{1,8}").unwrap().prop_map(Some),
    ]
}

/// Appends `b` to `a`'s product spine so products stay left-nested, the
/// only shape the grammar can produce.
fn left_product(a: CatExpr, b: CatExpr) -> CatExpr {
    fn spine(e: CatExpr, out: &mut Vec<CatExpr>) {
        if let CatExpr::Prod(x, y) = e {
            spine(*x, out);
            spine(*y, out);
        } else {
            out.push(e);
        }
    }
    let mut factors = Vec::new();
    spine(a, &mut factors);
    spine(b, &mut factors);
    let mut it = factors.into_iter();
    let first = it.next().expect("at least one factor");
    it.fold(first, |acc, t| CatExpr::Prod(Box::new(acc), Box::new(t)))
}

fn expr_strategy() -> impl Strategy<Value = CatExpr> {
    let leaf = (series_strategy(), 0u32..=9)
        .prop_map(|(name, level)| CatExpr::Qg { name, level });
    leaf.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| CatExpr::Rev(Box::new(e))),
            inner.clone().prop_map(|e| CatExpr::Gauge2(Box::new(e))),
            (inner.clone(), generator_strategy())
                .prop_map(|(e, g)| CatExpr::Adj { inner: Box::new(e), generator: g }),
            (inner.clone(), inner).prop_map(|(a, b)| left_product(a, b)),
        ]
    })
}

proptest! {
    #[test]
    fn parse_inverts_render(ast in expr_strategy()) {
        let text = ast.render();
        let reparsed = parse(&text);
        prop_assert_eq!(reparsed.as_ref(), Ok(&ast), "text: {}", text);
    }
}
