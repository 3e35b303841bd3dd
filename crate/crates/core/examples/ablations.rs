//! Builds the three ablation variants next to the full model and shows what
//! each one changes.

use hairgen::generator::{Model, Variant};
use hairgen::training::{ablation_variant, synth_dataset, TrainConfig};

fn main() -> anyhow::Result<()> {
    let full = TrainConfig::default();
    let s = &synth_dataset(1, 5)[0];
    // same hair pixels, different background
    let mut moved = s.image.clone();
    for c in 0..3 {
        for (v, m) in moved.plane_mut(0, c).iter_mut().zip(s.mask.data.plane(0, 0)) {
            if *m == 0.0 {
                *v = 1.0 - *v;
            }
        }
    }
    for (name, cfg) in [
        ("full", full.clone()),
        ("NCGA", ablation_variant(&full, Variant::Ncga)),
        ("NoS", ablation_variant(&full, Variant::NoS)),
        ("FB", ablation_variant(&full, Variant::Fb)),
    ] {
        let model = Model::new(&cfg.generator_config(), 0)?;
        let a = model.encode_appearance(&s.image, &s.mask)?;
        let b = model.encode_appearance(&moved, &s.mask)?;
        println!(
            "{name:5} λ_s={:<4} params={:7}  code unchanged by background: {}",
            cfg.lambda_s,
            model.g_store.numel(),
            a == b
        );
    }
    Ok(())
}
