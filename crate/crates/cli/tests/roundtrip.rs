use ladder_cli::eval::eval;
use ladder_cli::expr::parse;
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = String> {
    (1i64..20, 1i64..6, any::<bool>()).prop_map(|(n, d, imag)| {
        let i = if imag { "i" } else { "" };
        if d == 1 {
            format!("{n}{i}")
        } else {
            format!("{n}/{d}{i}")
        }
    })
}

fn lie_expr() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        (0u64..8, 0u64..8).prop_map(|(n, m)| format!("Z[{n},{m}]")),
        (0u64..6).prop_map(|i| format!("e[{i}]")),
        (0u64..6).prop_map(|i| format!("f[{i}]")),
        (0u64..6).prop_map(|i| format!("h[{i}]")),
        (0u64..6, 0u64..6).prop_map(|(i, j)| format!("phi(E[{i},{j}])")),
    ];
    leaf.prop_recursive(3, 16, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("[{a},{b}]")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} + {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} - ({b})")),
            (coeff(), inner).prop_map(|(c, a)| format!("{c}*({a})")),
        ]
    })
}

proptest! {
    #[test]
    fn formatting_is_a_fixed_point(s in lie_expr()) {
        let first = eval(&parse(&s).unwrap()).unwrap();
        let printed = first.to_string();
        let second = eval(&parse(&printed).unwrap()).unwrap();
        prop_assert_eq!(second.to_string(), printed);
        prop_assert_eq!(second.into_lie().unwrap(), first.into_lie().unwrap());
    }

    #[test]
    fn whitespace_is_insignificant(s in lie_expr()) {
        // spaces between tokens, never inside identifiers or numbers
        let spaced: String = s
            .chars()
            .flat_map(|c| if "[](),+-*/".contains(c) { vec![' ', c, ' '] } else { vec![c] })
            .collect();
        prop_assert_eq!(eval(&parse(&spaced).unwrap()).unwrap(), eval(&parse(&s).unwrap()).unwrap());
    }

    #[test]
    fn parser_never_panics(s in "[-+*/\\[\\](),0-9ZEefhtip ]{0,24}") {
        let _ = parse(&s).map(|e| eval(&e));
    }
}
