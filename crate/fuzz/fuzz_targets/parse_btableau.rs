#![no_main]

use libfuzzer_sys::fuzz_target;
use permtab::codec::{btableau_to_json, parse_btableau};
use permtab::{phi_b, phi_b_inverse};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(t) = parse_btableau(s) else { return };
    assert_eq!(parse_btableau(&btableau_to_json(&t)).unwrap(), t);
    if t.validate_b() && t.n() <= 32 {
        assert_eq!(phi_b_inverse(&phi_b(&t)).unwrap(), t);
    }
});
