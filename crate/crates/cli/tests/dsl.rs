use proptest::prelude::*;
use qsusy_cli::dsl::{parse, Evaluator, Expr};
use qsusy_core::{AlgebraConfig, Generator};

fn corpus() -> Vec<String> {
    include_str!("data/corpus.txt")
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect()
}

#[test]
fn corpus_round_trips() {
    let lines = corpus();
    assert!(lines.len() >= 100, "corpus has {} expressions", lines.len());
    for line in &lines {
        let ast = parse(line).unwrap_or_else(|e| panic!("{line}: {e}"));
        let printed = ast.to_string();
        let again = parse(&printed).unwrap_or_else(|e| panic!("{printed}: {e}"));
        assert_eq!(again, ast, "{line} printed as {printed}");
        assert_eq!(again.to_string(), printed);
    }
}

#[test]
fn corpus_evaluates_consistently() {
    let ev = Evaluator::new(AlgebraConfig::default(), 2).unwrap();
    for line in corpus() {
        let ast = parse(&line).unwrap();
        let direct = ev.eval(&ast);
        let reparsed = ev.eval(&parse(&ast.to_string()).unwrap());
        match (direct, reparsed) {
            (Ok(a), Ok(b)) => assert_eq!(a, b, "{line}"),
            (Err(a), Err(b)) => assert_eq!(a.to_string(), b.to_string()),
            (a, b) => panic!("{line}: {a:?} vs {b:?}"),
        }
    }
}

#[test]
fn every_generator_prints_as_a_parseable_atom() {
    for g in Generator::all(3) {
        assert_eq!(parse(&g.to_string()).unwrap(), Expr::Gen(g));
    }
}

fn leaf() -> impl Strategy<Value = Expr> {
    let gens = Generator::all(2);
    prop_oneof![
        (0u64..1000).prop_map(Expr::Int),
        Just(Expr::I),
        Just(Expr::S),
        Just(Expr::Q),
        Just(Expr::Id),
        (1u8..=3).prop_map(Expr::T),
        proptest::sample::select(gens).prop_map(Expr::Gen),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(5, 48, 2, |inner| {
        let pair = || (inner.clone(), inner.clone());
        prop_oneof![
            inner.clone().prop_map(Expr::neg),
            pair().prop_map(|(a, b)| Expr::add(a, b)),
            pair().prop_map(|(a, b)| Expr::sub(a, b)),
            pair().prop_map(|(a, b)| Expr::mul(a, b)),
            pair().prop_map(|(a, b)| Expr::div(a, b)),
            pair().prop_map(|(a, b)| Expr::tensor(a, b)),
            pair().prop_map(|(a, b)| Expr::ad(a, b)),
            (inner.clone(), -5i32..6).prop_map(|(a, e)| Expr::pow(a, e)),
            inner.clone().prop_map(Expr::delta),
            inner.clone().prop_map(Expr::antipode),
            inner.clone().prop_map(Expr::eps),
        ]
    })
}

proptest! {
    #[test]
    fn printing_then_parsing_is_identity(e in expr()) {
        let printed = e.to_string();
        prop_assert_eq!(parse(&printed).unwrap(), e);
    }
}
