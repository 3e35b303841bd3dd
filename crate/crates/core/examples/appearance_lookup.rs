//! Finds appearance references by mean hair color.
//!
//! ```text
//! cargo run --example appearance_lookup -- [RRGGBB] [k]
//! ```

use hairgen::service::{parse_hex, ReferenceLibrary, DEFAULT_LIBRARY_SIZE};

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1);
    let rgb = parse_hex(&args.next().unwrap_or_else(|| "6B3A1E".into()))?;
    let k = args.next().map(|s| s.parse()).transpose()?.unwrap_or(5);
    let lib = ReferenceLibrary::synthetic(DEFAULT_LIBRARY_SIZE, 0);
    for n in lib.knn(rgb, k) {
        println!("#{:<3} {}  distance {:.4}", n.id, n.rgb, n.distance);
    }
    Ok(())
}
