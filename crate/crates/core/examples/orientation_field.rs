//! Estimates the strand orientation of a synthetic sample and of analytic
//! gratings, and writes color-coded previews.
//!
//! ```text
//! cargo run --example orientation_field -- [out_dir]
//! ```

use std::f64::consts::PI;
use std::path::PathBuf;

use hairgen::imageio;
use hairgen::orientation::{
    angle_bin, estimate_orientation, grating, smooth_orientation, GaborBank, DEFAULT_SMOOTH_SIGMA, N_ORIENT,
};
use hairgen::training::synth_dataset;

fn main() -> anyhow::Result<()> {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "out/orientation".into()));
    std::fs::create_dir_all(&out)?;
    let bank = GaborBank::default();

    // one grating per bin; count interior pixels landing in the right bin
    let mut worst = 1.0f64;
    for i in 0..N_ORIENT {
        let f = estimate_orientation(&grating(48, 48, GaborBank::angle(i), 4.0, 0.3), &bank)?;
        let labels = f.label.expect("hard estimate keeps labels");
        let m = bank.k / 2;
        let (mut hit, mut tot) = (0, 0);
        for y in m..48 - m {
            for x in m..48 - m {
                tot += 1;
                hit += (angle_bin(labels.at(0, 0, y, x) as f64) == i) as usize;
            }
        }
        worst = worst.min(hit as f64 / tot as f64);
    }
    println!("gratings: worst per-bin accuracy {:.3}", worst);

    let s = &synth_dataset(1, 7)[0];
    let raw = estimate_orientation(&s.image, &bank)?;
    let smooth = smooth_orientation(&raw, DEFAULT_SMOOTH_SIGMA)?;
    let (truth, est) = (s.orientation.angles(), smooth.angles());
    let (mut within, mut n) = (0, 0);
    for p in 0..truth.numel() {
        if s.mask.data.data()[p] == 1.0 {
            let d = (truth.data()[p] as f64 - est.data()[p] as f64).rem_euclid(PI);
            within += (d.min(PI - d) <= PI / N_ORIENT as f64) as usize;
            n += 1;
        }
    }
    println!("synthetic sample: {:.1}% of hair pixels within one bin", 100.0 * within as f64 / n as f64);

    imageio::save_rgb(&s.image, out.join("image.png"))?;
    raw.save_png(out.join("raw.png"))?;
    smooth.save_png(out.join("smoothed.png"))?;
    s.orientation.save_png(out.join("truth.png"))?;
    println!("wrote previews to {}", out.display());
    Ok(())
}
