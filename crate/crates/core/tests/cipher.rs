mod common;

use brauer_kit::brauer::invariants;
use brauer_kit::cipher::{
    check_theorem_permutation, check_theorem_v1, check_theorem_v2, friedman_keylength, friedman_recover_key,
    index_of_coincidence, mutual_index, mutual_index_shift, route_read, solve_differences, transposition_decrypt,
    transposition_encrypt, vigenere_decrypt, vigenere_encrypt, vigenere_to_config, Alphabet, BlockPermutation,
    CipherError, CipherRegistry, Grid, RouteSpec, VigenereKey, ENGLISH_FREQUENCIES, TARGET_IOC,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

fn chars(s: &str) -> Vec<char> {
    s.chars().collect()
}

fn key(word: &str) -> VigenereKey {
    VigenereKey::from_word(word, &Alphabet::default()).unwrap()
}

#[test]
fn vigenere_worked_example() {
    let a = Alphabet::default();
    assert_eq!(
        vigenere_encrypt("classicalcryptography", &key("MDPI"), &a).unwrap(),
        "OOPAELRIXFGGBWDODDEPK"
    );
    assert_eq!(vigenere_encrypt("HELLO", &key("AAA"), &a).unwrap(), "HELLO");
}

#[test]
fn out_of_alphabet_character_is_located() {
    let err = vigenere_encrypt("AB C", &key("B"), &Alphabet::default()).unwrap_err();
    assert!(matches!(err, CipherError::OutOfAlphabet { ch: ' ', offset: 2 }));
}

#[test]
fn transposition_blocks() {
    let pi = BlockPermutation::parse("3 4 1 2").unwrap();
    let enc = |t: &str| {
        transposition_encrypt(&chars(t), &pi)
            .unwrap()
            .into_iter()
            .collect::<String>()
    };
    assert_eq!(enc("CRYP"), "YPCR");
    assert_eq!(enc("TOGR"), "GRTO");
    let id = BlockPermutation::parse("1 2 3").unwrap();
    assert_eq!(transposition_encrypt(&chars("ABCDEF"), &id).unwrap(), chars("ABCDEF"));
    assert!(matches!(
        transposition_encrypt(&chars("ABCDE"), &pi),
        Err(CipherError::LengthMismatch(_))
    ));
}

#[test]
fn route_reading_of_the_grid() {
    let grid = Grid::from_rows(&["CRA", "RGP", "YOH", "PTY"]).unwrap();
    assert_eq!(route_read(&grid, &RouteSpec::snake_cols(4, 3)).unwrap(), "CRYPTOGRAPHY");
    assert_eq!(route_read(&grid, &RouteSpec::row_major(4, 3)).unwrap(), "CRARGPYOHPTY");
    let one = Grid::from_rows(&["Q"]).unwrap();
    assert_eq!(route_read(&one, &RouteSpec::row_major(1, 1)).unwrap(), "Q");
    assert!(RouteSpec::new(2, 2, vec![(0, 0), (0, 1), (1, 0), (0, 0)]).is_err());
}

#[test]
fn coincidence_indices() {
    let ioc = index_of_coincidence(&chars("AAAA")).unwrap();
    assert_eq!(ioc.numerator, ioc.denominator);
    assert_eq!(index_of_coincidence(&chars("ABCDEF")).unwrap().numerator, 0);
    // brute force: count ordered pairs of equal letters
    let text = chars("OOPAELRIXFGGBWDODDEPK");
    let pairs = (0..text.len())
        .flat_map(|i| (0..text.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && text[i] == text[j])
        .count() as u64;
    let ioc = index_of_coincidence(&text).unwrap();
    assert_eq!((ioc.numerator, ioc.denominator), (pairs, 420));
    assert_eq!(pairs, 18);
    assert!(index_of_coincidence(&chars("A")).is_err());

    assert_eq!(mutual_index(&chars("A"), &chars("A")).unwrap().value(), 1.0);
    assert_eq!(mutual_index(&chars("AB"), &chars("CD")).unwrap().numerator, 0);
    assert!(mutual_index::<char>(&[], &chars("A")).is_err());
}

#[test]
fn mutual_index_peaks_at_the_true_shift() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let t1 = english_sample(&mut rng, 600);
    let t2: Vec<u32> = english_sample(&mut rng, 600)
        .iter()
        .map(|r| (r + 26 - 9) % 26)
        .collect();
    let best = (0..26)
        .max_by(|&a, &b| {
            let ma = mutual_index_shift(&t1, &t2, a, 26).unwrap().value();
            let mb = mutual_index_shift(&t1, &t2, b, 26).unwrap().value();
            ma.partial_cmp(&mb).unwrap()
        })
        .unwrap();
    assert_eq!(best, 9);
}

#[test]
fn vigenere_split_lists() {
    let config = vigenere_to_config("OOPAELRIXFGGBWDODDEPK", 4).unwrap();
    let words: Vec<String> = config
        .polygons()
        .iter()
        .map(|p| p.word().iter().map(|v| v.as_str()).collect())
        .collect();
    assert_eq!(words, ["OEXBDK", "OLFWD", "PRGDE", "AIGOP"]);
    let inv = invariants(&config);
    assert_eq!((inv.dim_lambda, inv.dim_center), (35, Some(14)));
}

#[test]
fn abab_split_in_two() {
    let config = vigenere_to_config("ABAB", 2).unwrap();
    let words = vec![chars("AA"), chars("BB")];
    assert_eq!(invariants(&config).dim_lambda, dim_lambda_oracle(&words));
    assert_eq!(dim_lambda_oracle(&words), 8);
}

#[test]
fn theorem_diagnostics_on_the_worked_example() {
    let v1 = check_theorem_v1("OOPAELRIXFGGBWDODDEPK", 4).unwrap();
    assert!(!v1.precondition_met);
    assert_eq!((v1.actual, v1.claimed, v1.gap()), (35, 26, 9));
    assert_eq!(v1.violations.len(), 9);
    let v2 = check_theorem_v2("OOPAELRIXFGGBWDODDEPK", 4).unwrap();
    assert!(!v2.precondition_met);
    assert!(vigenere_to_config("ABCD", 4).is_err());
}

#[test]
fn permutation_theorem_on_the_grid_plaintext() {
    let key = BlockPermutation::parse("3 4 1 2").unwrap();
    let verdict = check_theorem_permutation("CRYPTOGRAPHY", &key).unwrap();
    assert!(verdict.equal);
    assert_eq!(verdict.ciphertext, "YPCRGRTOHYAP");
    assert_eq!(verdict.block_sizes, vec![4, 4, 4]);
    let id = check_theorem_permutation("CRYPTOGRAPHY", &BlockPermutation::parse("1 2 3 4").unwrap()).unwrap();
    assert_eq!(id.ciphertext, "CRYPTOGRAPHY");
    assert!(id.equal);
}

#[test]
fn difference_system() {
    assert_eq!(
        solve_differences(3, 26, 0, &[(0, 1, 3), (1, 2, 12)]).unwrap(),
        vec![0, 3, 15]
    );
}

#[test]
fn friedman_on_sampled_english() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let plain = english_sample(&mut rng, 700);
    let secret = [12, 3, 15, 8];
    let cipher = shift_encrypt(&plain, &secret);
    let ranked = friedman_keylength(&cipher, 10).unwrap();
    assert_eq!(ranked[0].m, 4);
    assert!(ranked.iter().find(|c| c.m == 8).unwrap().multiple_of == Some(4));
    let recovery = friedman_recover_key(&cipher, 4, 26, &ENGLISH_FREQUENCIES).unwrap();
    assert!(recovery.candidates.iter().take(3).any(|c| c.residues == secret));
    assert_eq!(recovery.candidates.len(), 26);
}

#[test]
fn friedman_on_shift_and_uniform_text() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let shifted = shift_encrypt(&english_sample(&mut rng, 2000), &[7]);
    let one = friedman_keylength(&shifted, 1).unwrap();
    assert!((one[0].mean_ioc() - TARGET_IOC).abs() <= 0.01);

    let uniform: Vec<u32> = (0..4000).map(|_| rng.gen_range(0..26)).collect();
    for c in friedman_keylength(&uniform, 6).unwrap() {
        assert!(!c.flagged, "m={} flagged on uniform text", c.m);
        assert!((c.mean_ioc() - 1.0 / 26.0).abs() < 0.006);
    }
}

#[test]
fn caesar_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let plain = english_sample(&mut rng, 300);
    let recovery = friedman_recover_key(&plain, 1, 26, &ENGLISH_FREQUENCIES).unwrap();
    assert_eq!(recovery.candidates[0].residues, vec![0]);
}

#[test]
fn registry_selects_by_name() {
    let registry = CipherRegistry::default();
    let names: Vec<&str> = registry.names().collect();
    assert_eq!(names, ["route", "transposition", "vigenere"]);
    let v = registry.get("vigenere").unwrap();
    assert_eq!(
        v.encrypt("classicalcryptography", "MDPI").unwrap(),
        "OOPAELRIXFGGBWDODDEPK"
    );
    let r = registry.get("route").unwrap();
    assert_eq!(r.decrypt("CRARGPYOHPTY", "4x3:snake-cols").unwrap(), "CRYPTOGRAPHY");
    assert!(registry.get("enigma").is_none());
}

proptest! {
    #[test]
    fn vigenere_round_trip(text in "[A-Z]{0,60}", k in "[A-Z]{1,8}") {
        let a = Alphabet::default();
        let c = vigenere_encrypt(&text, &key(&k), &a).unwrap();
        prop_assert_eq!(vigenere_decrypt(&c, &key(&k), &a).unwrap(), text);
    }

    #[test]
    fn transposition_round_trip(text in "[A-Z]{1,40}", seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = text.len();
        let mut p: Vec<usize> = (1..=n).collect();
        rand::seq::SliceRandom::shuffle(p.as_mut_slice(), &mut rng);
        let line: Vec<String> = p.iter().map(|x| x.to_string()).collect();
        let key = BlockPermutation::parse(&line.join(" ")).unwrap();
        let c = transposition_encrypt(&chars(&text), &key).unwrap();
        prop_assert_eq!(transposition_decrypt(&c, &key).unwrap(), chars(&text));
    }

    #[test]
    fn route_round_trip(rows in 1usize..6, cols in 1usize..6, shape in 0usize..4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let text: String = (0..rows * cols).map(|_| (b'A' + rng.gen_range(0..26)) as char).collect();
        let shapes = ["row-major", "col-major", "snake-cols", "snake-rows"];
        let route = format!("{rows}x{cols}:{}", shapes[shape]);
        let registry = CipherRegistry::default();
        let cipher = registry.get("route").unwrap();
        let c = cipher.encrypt(&text, &route).unwrap();
        prop_assert_eq!(cipher.decrypt(&c, &route).unwrap(), text);
    }

    #[test]
    fn mic_swaps_with_negated_shift(a in proptest::collection::vec(0u32..26, 1..40),
                                    b in proptest::collection::vec(0u32..26, 1..40),
                                    s in 0u32..26) {
        let ab = mutual_index_shift(&a, &b, s, 26).unwrap();
        let ba = mutual_index_shift(&b, &a, (26 - s) % 26, 26).unwrap();
        prop_assert_eq!(ab.ratio(), ba.ratio());
    }

    #[test]
    fn split_invariants_survive_a_global_shift(text in "[A-F]{8,40}", m in 1usize..4, k in "[A-Z]") {
        prop_assume!(text.len() >= 2 * m);
        let k: String = k.repeat(m);
        let again = vigenere_encrypt(&text, &key(&k), &Alphabet::default()).unwrap();
        let before = invariants(&vigenere_to_config(&text, m).unwrap());
        let after = invariants(&vigenere_to_config(&again, m).unwrap());
        prop_assert_eq!(before, after);
    }
}
