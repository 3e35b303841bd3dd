//! Paints guide strokes onto the orientation field of a sample, completes it
//! with the orientation inpainter and regenerates the hair.
//!
//! ```text
//! cargo run --example stroke_edit -- [checkpoint] [out_dir]
//! ```

use std::path::PathBuf;

use hairgen::generator::{ConditionSet, Model};
use hairgen::imageio;
use hairgen::inpaint::{compose_orientation_input, inpaint_orientation, orientation_noise, InpaintRequest, Stroke};
use hairgen::orientation::OrientationField;
use hairgen::training::synth_dataset;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1);
    let ckpt = args.next().unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/reference/full/model.mgan").into());
    let out = PathBuf::from(args.next().unwrap_or_else(|| "out/strokes".into()));
    std::fs::create_dir_all(&out)?;
    let model = Model::load(&ckpt)?;
    let s = &synth_dataset(1, 0xbeef)[0];
    let base = model.estimate_orientation(&s.image)?;

    let strokes = vec![
        Stroke { points: vec![[12.0, 20.0], [32.0, 30.0], [52.0, 22.0]], radius: 1.5 },
        Stroke { points: vec![[20.0, 44.0], [44.0, 44.0]], radius: 1.5 },
    ];
    let req = InpaintRequest::new(base.clone(), strokes);
    let noise = orientation_noise(1, 64, 64, &mut ChaCha8Rng::seed_from_u64(3));
    let input = compose_orientation_input(&req, &noise)?;
    let filled = inpaint_orientation(&model.inpaint_orient, &input.field, &input.hole, &input.stroke_mask, &s.mask)?;
    let edited = OrientationField::new(filled, s.mask.data.clone())?;
    println!("hole covers {:.1}% of the image", 100.0 * input.hole.area() / (64.0 * 64.0));

    base.save_png(out.join("orientation_before.png"))?;
    edited.save_png(out.join("orientation_after.png"))?;
    imageio::save_mask(&input.hole, out.join("hole.png"))?;
    let img = model.generate(&ConditionSet::reconstruction(&s.image, &s.mask, edited))?;
    imageio::save_rgb(&s.image, out.join("source.png"))?;
    imageio::save_rgb(&img, out.join("edited.png"))?;
    println!("wrote {}", out.display());
    Ok(())
}
