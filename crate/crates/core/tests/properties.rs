use proptest::prelude::*;
use spinorcheck::bstower;
use spinorcheck::cycles::{self, CycleClass};
use spinorcheck::isogeom::{PrimeField, QuadraticSpace, Subspace};
use spinorcheck::rootsys::{CartanMatrix, RootSystem, WeylWord};

fn vectors(p: u32, m: usize, max_rows: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..p, m), 0..=max_rows)
}

fn span(p: u32, m: usize, rows: Vec<Vec<u32>>) -> Subspace {
    Subspace::span(PrimeField::new(p as u64).unwrap(), m, rows)
}

proptest! {
    #[test]
    fn grassmann_identity(a in vectors(7, 10, 7), b in vectors(7, 10, 7)) {
        let s = span(7, 10, a);
        let t = span(7, 10, b);
        let sum = s.sum(&t).unwrap();
        let cap = s.intersect(&t).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), s.dim() + t.dim());
        prop_assert!(sum.contains(&s) && sum.contains(&t));
        prop_assert!(s.contains(&cap) && t.contains(&cap));
    }

    #[test]
    fn perp_is_an_involution(a in vectors(5, 10, 10)) {
        let qs = QuadraticSpace::new(5).unwrap();
        let s = span(5, 10, a);
        let sp = qs.perp(&s).unwrap();
        prop_assert_eq!(s.dim() + sp.dim(), 10);
        prop_assert_eq!(qs.perp(&sp).unwrap(), s);
    }

    #[test]
    fn span_is_canonical(a in vectors(3, 6, 5), shuffle in any::<u64>()) {
        let s = span(3, 6, a.clone());
        let mut b = a;
        if !b.is_empty() {
            let k = (shuffle % b.len() as u64) as usize;
            b.rotate_left(k);
            let first = b[0].clone();
            b.push(first.iter().map(|x| (2 * x) % 3).collect());
        }
        prop_assert_eq!(span(3, 6, b), s.clone());
        let json = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<Subspace>(&json).unwrap(), s);
    }

    #[test]
    fn weyl_word_round_trip(letters in prop::collection::vec(1usize..=9, 0..12)) {
        let w = WeylWord::new(letters);
        prop_assert_eq!(w.to_string().parse::<WeylWord>().unwrap(), w);
    }

    #[test]
    fn cycle_class_round_trip(a in prop::collection::vec(-50i64..50, 1..12)) {
        let c = CycleClass::new(a);
        prop_assert_eq!(c.to_string().parse::<CycleClass>().unwrap(), c);
    }

    #[test]
    fn reduced_word_tables_are_symmetric(letters in prop::collection::vec(1usize..=5, 1..10), d in any::<bool>()) {
        let rs = RootSystem::new(if d { CartanMatrix::d(5) } else { CartanMatrix::a(5) });
        let w = WeylWord::new(letters);
        if rs.is_reduced(&w).unwrap() {
            let g = bstower::gamma_sequence(&rs, &w).unwrap();
            let t = bstower::pairing_table(&rs, &g).unwrap();
            prop_assert!(t.is_symmetric());
            prop_assert!((1..=t.len()).all(|k| t.entry(k, k) == 2));
        } else {
            prop_assert!(bstower::gamma_sequence(&rs, &w).is_err());
        }
    }
}

#[test]
fn composition_counts_are_binomial() {
    fn binom(n: u64, k: u64) -> u64 {
        (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
    }
    for d in 3..=9 {
        let n = cycles::enumerate_classes(d).count() as u64;
        assert_eq!(n, binom(d as u64 - 3 + 9, 9), "degree {d}");
    }
}
