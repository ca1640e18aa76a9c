use plethyrs::engine::{hook_column_part, Engine};
use plethyrs::{parse, SharedCharacterTable};

/// Every ordered factorization of `n` into factors at least 2.
fn factorizations(n: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for d in 2..=n {
        if n.is_multiple_of(d) {
            for mut rest in factorizations(n / d) {
                rest.insert(0, d);
                out.push(rest);
            }
        }
    }
    out
}

fn shape(n: u32, column: bool) -> String {
    if column {
        format!("s[{}]", vec!["1"; n as usize].join(","))
    } else {
        format!("s[{n}]")
    }
}

#[test]
fn alphabet_and_oracle_agree_on_row_and_column_chains() {
    let memo = SharedCharacterTable::new();
    let mut checked = 0;
    for n in 4..=16 {
        for factors in factorizations(n).into_iter().filter(|f| f.len() >= 2) {
            for mask in 0..1u32 << factors.len() {
                let text = factors
                    .iter()
                    .enumerate()
                    .map(|(i, &k)| shape(k, mask >> i & 1 == 1))
                    .collect::<Vec<_>>()
                    .join(" o ");
                let e = parse(&text).unwrap();
                let oracle = hook_column_part(&memo, &e, Engine::Oracle).unwrap();
                let alphabet = hook_column_part(&memo, &e, Engine::Alphabet).unwrap();
                assert_eq!(oracle, alphabet, "{text}");
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn formula_matches_oracle_where_defined() {
    let memo = SharedCharacterTable::new();
    for text in ["s[4] o s[3]", "s[2] o s[4] o s[2]", "s[3] o s[2] o s[3]", "s[1] o s[2] o s[5]"] {
        let e = parse(text).unwrap();
        assert_eq!(
            hook_column_part(&memo, &e, Engine::Formula).unwrap(),
            hook_column_part(&memo, &e, Engine::Oracle).unwrap(),
            "{text}"
        );
    }
}
