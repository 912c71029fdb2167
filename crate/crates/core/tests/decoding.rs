use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use spinorcheck::bstower::PairingTable;
use spinorcheck::isogeom::{Family, MaximalIsotropic, QuadraticSpace};
use spinorcheck::liftconfig::{self, Configuration, IsotropicFlag};
use spinorcheck::rootsys::CartanMatrix;
use spinorcheck::spinor;

fn lifted() -> (IsotropicFlag, Configuration) {
    let qs = QuadraticSpace::new(101).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    loop {
        let flag = liftconfig::random_flag(&qs, &mut rng);
        let v = qs.random_maximal_isotropic(Family::One, &mut rng);
        if let Ok(c) = liftconfig::lift_point(&v, &flag) {
            return (flag, c);
        }
    }
}

#[test]
fn configuration_round_trips_with_fixed_field_order() {
    let (flag, c) = lifted();
    let json = serde_json::to_string(&c).unwrap();
    let keys: Vec<String> = match serde_json::from_str::<Value>(&json).unwrap() {
        Value::Object(m) => m.keys().cloned().collect(),
        _ => unreachable!(),
    };
    let order = ["v4", "v3", "v2", "v5", "v1", "v3p", "v2p", "v4p", "v3pp", "v5p"];
    let positions: Vec<usize> = order.iter().map(|k| json.find(&format!("\"{k}\":")).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(keys.len(), 10);
    let back: Configuration = serde_json::from_str(&json).unwrap();
    assert_eq!(back, c);
    assert!(liftconfig::validate_configuration(&back, &flag).unwrap().holds());
}

#[test]
fn configuration_with_swapped_families_is_rejected() {
    let (_, c) = lifted();
    let mut v: Value = serde_json::to_value(&c).unwrap();
    let v4 = v["v4"].clone();
    v["v5"] = v4;
    let err = serde_json::from_value::<Configuration>(v.clone()).unwrap_err().to_string();
    assert!(err.contains("V5"), "{err}");
    v["v5"] = serde_json::to_value(&c.v5).unwrap();
    v["v3"] = v["v2"].clone();
    assert!(serde_json::from_value::<Configuration>(v).is_err());
}

#[test]
fn flag_round_trip_and_rejections() {
    let (flag, _) = lifted();
    let json = serde_json::to_string(&flag).unwrap();
    assert_eq!(serde_json::from_str::<IsotropicFlag>(&json).unwrap(), flag);
    let mut v: Value = serde_json::from_str(&json).unwrap();
    v["w1"] = v["w2"].clone();
    assert!(serde_json::from_value::<IsotropicFlag>(v).is_err());
}

#[test]
fn maximal_isotropic_family_is_checked() {
    let qs = QuadraticSpace::new(2).unwrap();
    let m = qs.reference();
    let json = serde_json::to_string(&m).unwrap();
    assert_eq!(serde_json::from_str::<MaximalIsotropic>(&json).unwrap(), m);
    let lie = json.replace("\"family\":1", "\"family\":2");
    assert!(serde_json::from_str::<MaximalIsotropic>(&lie).is_err());
    let bad_family = json.replace("\"family\":1", "\"family\":3");
    assert!(serde_json::from_str::<MaximalIsotropic>(&bad_family).is_err());
}

#[test]
fn pairing_table_json_matches_embedded_copy() {
    let json = serde_json::to_string(&spinor::reference_table()).unwrap();
    let t: PairingTable = serde_json::from_str(&json).unwrap();
    assert_eq!(t, spinor::standard_table());
    assert!(serde_json::from_str::<PairingTable>("[[2,1],[1]]").is_err());
}

#[test]
fn cartan_matrix_text() {
    let d5: CartanMatrix = "2 -1 0 0 0; -1 2 -1 0 0; 0 -1 2 -1 -1; 0 0 -1 2 0; 0 0 -1 0 2".parse().unwrap();
    assert_eq!(d5, CartanMatrix::d(5));
    assert!("2 -1; -1 1".parse::<CartanMatrix>().is_err());
    assert!("2 -2; -2 2".parse::<CartanMatrix>().is_err());
}
