#![no_main]

use libfuzzer_sys::fuzz_target;
use permtab::codec::{parse_tableau, tableau_to_json};
use permtab::{phi, phi_inverse};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(t) = parse_tableau(s) else { return };
    assert_eq!(parse_tableau(&tableau_to_json(&t)).unwrap(), t);
    if t.shape().is_standard() && t.validate() && t.n() <= 64 {
        assert_eq!(phi_inverse(&phi(&t)), t);
    }
});
