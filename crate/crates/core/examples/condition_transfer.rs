//! Recombines the shape, structure, appearance and background of held-out
//! samples with a trained checkpoint.
//!
//! ```text
//! cargo run --example condition_transfer -- [checkpoint] [out_dir]
//! ```

use std::path::PathBuf;

use hairgen::generator::{Appearance, ConditionSet, Model};
use hairgen::imageio;
use hairgen::training::synth_dataset;

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1);
    let ckpt = args.next().unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/reference/full/model.mgan").into());
    let out = PathBuf::from(args.next().unwrap_or_else(|| "out/transfer".into()));
    std::fs::create_dir_all(&out)?;
    let model = Model::load(&ckpt)?;
    let s = synth_dataset(3, 0xfeed);
    let (a, b, c) = (&s[0], &s[1], &s[2]);
    let field = |x: &hairgen::training::SynthSample| model.estimate_orientation(&x.image);

    let runs = [
        ("reconstruction", ConditionSet::reconstruction(&a.image, &a.mask, field(a)?)),
        (
            "appearance_from_b",
            ConditionSet {
                appearance: Appearance::Reference { image: b.image.clone(), mask: b.mask.clone() },
                ..ConditionSet::reconstruction(&a.image, &a.mask, field(a)?)
            },
        ),
        (
            "structure_from_c",
            ConditionSet {
                structure: model.transfer_structure(&field(c)?, &c.mask, &a.mask)?,
                ..ConditionSet::reconstruction(&a.image, &a.mask, field(a)?)
            },
        ),
        (
            "shape_from_b",
            ConditionSet {
                shape: b.mask.clone(),
                structure: model.transfer_structure(&field(a)?, &a.mask, &b.mask)?,
                ..ConditionSet::reconstruction(&a.image, &a.mask, field(a)?)
            },
        ),
        ("rotated_structure", ConditionSet::reconstruction(&a.image, &a.mask, field(a)?.rotated90())),
    ];
    imageio::save_rgb(&a.image, out.join("source.png"))?;
    for (name, cs) in runs {
        let img = model.generate(&cs)?;
        imageio::save_rgb(&img, out.join(format!("{name}.png")))?;
        println!("{name}: wrote {}", out.join(format!("{name}.png")).display());
    }
    Ok(())
}
