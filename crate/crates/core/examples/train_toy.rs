//! A short training run on the synthetic dataset, printing the loss terms
//! and held-out metrics.
//!
//! ```text
//! cargo run --example train_toy -- [iters] [out_dir]
//! ```

use std::path::PathBuf;

use hairgen::training::{
    controllability, hard_structural_metric, holdout_samples, reconstruction_error, synth_dataset, train, TrainConfig,
};

fn main() -> anyhow::Result<()> {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let mut args = std::env::args().skip(1);
    let iters = args.next().map(|s| s.parse()).transpose()?.unwrap_or(100);
    let out = PathBuf::from(args.next().unwrap_or_else(|| "out/train_toy".into()));
    let cfg = TrainConfig { iters, dataset_size: 64, inpaint_iters: 50, checkpoint_every: 0, ..TrainConfig::default() };
    let run = train(&cfg, synth_dataset(cfg.dataset_size, cfg.seed), Some(&out))?;
    for row in run.log.iter().step_by((iters / 10).max(1)) {
        let t = row.terms;
        println!("{:5}  L_c {:7.3}  L_s {:.4}  L_p {:.4}  G {:8.3}  D {:.3}", row.iter, t.c, t.s, t.p, row.g_total, row.d_total);
    }
    let held = holdout_samples(&cfg);
    println!("hard structural metric {:.4}", hard_structural_metric(&run.model, &held)?);
    println!("controllability        {:.1} deg", controllability(&run.model, &held)?);
    println!("reconstruction MAE     {:.4}", reconstruction_error(&run.model, &held)?);
    println!("log and model in {}", out.display());
    Ok(())
}
