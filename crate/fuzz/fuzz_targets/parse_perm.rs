#![no_main]

use libfuzzer_sys::fuzz_target;
use permtab::codec::{parse_perm, perm_to_json};
use permtab::{phi, phi_b, phi_b_inverse, phi_inverse};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(p) = parse_perm(s) else { return };
    assert_eq!(parse_perm(&perm_to_json(&p)).unwrap(), p);
    if p.len() <= 64 {
        assert_eq!(phi(&phi_inverse(&p)), p);
        if let Ok(t) = phi_b_inverse(&p) {
            assert_eq!(phi_b(&t), p);
        }
    }
});
