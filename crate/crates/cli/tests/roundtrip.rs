use hecke_cli::expr::{parse, Expr};
use hecke_core::scalar::RatFunc;
use hecke_core::Hecke;

const CORPUS: [&str; 50] = [
    "1",
    "0",
    "q",
    "q^-1",
    "q^2 - q^-2",
    "3/4",
    "-1",
    "--s1",
    "s1",
    "s1^-1",
    "s1^2",
    "s1*s2*s1 - s2*s1*s2",
    "s1^2 - 1 - (q - q^-1)*s1",
    "y3 - s2*y2*s2",
    "y1",
    "y2 + y3",
    "y2*y3",
    "u2",
    "u3",
    "u3*u3",
    "(s1 + q^-1)*(q + q^-1)^-1",
    "(q - s1)*(q + q^-1)^-1",
    "1 + 2*3",
    "(1 + 2)*3",
    "1 - 2 - 3",
    "1 - (2 - 3)",
    "-q^2",
    "(-q)^2",
    "s1*-s2",
    "s1 + -s2",
    "s1 - -s2",
    "(s1*s2)^3",
    "(s1*s2)^-1",
    "s1^-1*s2^-1",
    "2/3*s1 + 5/7*s2",
    "q*s1*q^-1",
    "(y2 - q^2)*(y2 - q^-2)",
    "y3*(y3 - 1)",
    "s2*y2 - y2*s2 - u3",
    "((s1))",
    "(((s1 + s2)))*s1",
    "s1*(s2*s1)",
    "(s1*s2)*s1",
    "-(s1 + s2)",
    "-(s1*s2)",
    "(-s1)*s2",
    "q^0",
    "(q + 1)^-1",
    "12345678901234567890*s1",
    "(1/2 + q)*(y3 + u2)^2",
];

#[test]
fn render_reparses_to_equal_ast() {
    let h: Hecke<RatFunc> = Hecke::symbolic();
    for src in CORPUS {
        let e = parse(src, 3).unwrap_or_else(|err| panic!("{src}: {err}"));
        let rendered = e.to_string();
        let again = parse(&rendered, 3).unwrap_or_else(|err| panic!("{rendered}: {err}"));
        assert_eq!(again, e, "{src} -> {rendered}");
        assert_eq!(again.to_string(), rendered);
        if src != "(q + 1)^-1" {
            assert_eq!(e.evaluate(&h, 3).unwrap(), again.evaluate(&h, 3).unwrap(), "{src}");
        }
    }
}

#[test]
fn rendering_drops_redundant_parentheses() {
    let cases = [("((s1))", "s1"), ("(s1*s2)*s1", "s1*s2*s1"), ("s1*(s2*s1)", "s1*(s2*s1)"), ("(-q)^2", "(-q)^2")];
    for (src, expected) in cases {
        assert_eq!(parse(src, 3).unwrap().to_string(), expected);
    }
}

#[test]
fn scalar_inverse_of_sum() {
    // (q + 1) is a scalar, so its inverse exists
    let h: Hecke<RatFunc> = Hecke::symbolic();
    let x = parse("(q + 1)^-1*(q + 1)", 2).unwrap().evaluate(&h, 2).unwrap();
    assert_eq!(x, hecke_core::HeckeElement::one(2));
    assert!(matches!(parse("q", 2).unwrap(), Expr::Q));
}
