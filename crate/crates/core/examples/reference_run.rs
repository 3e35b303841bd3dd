//! Trains the full model and the NoS ablation with the default toy
//! configuration and writes both runs under `reference/`.
//!
//! ```text
//! cargo run --example reference_run -- [out_dir] [iters]
//! cargo run --example reference_run -- [out_dir] metrics   # re-evaluate saved runs
//! cargo run --example reference_run -- [out_dir] inpainters  # refit inpainters with the current defaults
//! ```

use std::path::{Path, PathBuf};

use hairgen::generator::{Model, Variant};
use hairgen::training::{
    ablation_variant, chromatic_drop, controllability, hard_structural_metric, holdout_samples, read_log,
    reconstruction_error, refit_inpainters, synth_dataset, train, TrainConfig,
};

fn write_metrics(dir: &Path, cfg: &TrainConfig, model: &Model) -> anyhow::Result<()> {
    let held = holdout_samples(cfg);
    let log = read_log(dir.join("log.csv"))?;
    let (early, late) = chromatic_drop(&log, 50).unwrap_or((f64::NAN, f64::NAN));
    let metrics = serde_json::json!({
        "chromatic_early": early,
        "chromatic_late": late,
        "hard_structural_metric": hard_structural_metric(model, &held)?,
        "controllability_deg": controllability(model, &held)?,
        "reconstruction_error": reconstruction_error(model, &held)?,
    });
    std::fs::write(dir.join("metrics.json"), serde_json::to_string_pretty(&metrics)? + "\n")?;
    log::info!("{}: {metrics}", dir.display());
    Ok(())
}

fn main() -> anyhow::Result<()> {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let mut args = std::env::args().skip(1);
    let out = PathBuf::from(args.next().unwrap_or_else(|| "reference".into()));
    let mode = args.next();
    let saved = matches!(mode.as_deref(), Some("metrics" | "inpainters"));
    let iters = if saved { 2000 } else { mode.as_ref().map(|s| s.parse()).transpose()?.unwrap_or(2000) };

    let full = TrainConfig { iters, checkpoint_every: 0, ..TrainConfig::default() };
    let nos = ablation_variant(&full, Variant::NoS);
    for (name, cfg) in [("full", full), ("nos", nos)] {
        let dir = out.join(name);
        if saved {
            let mut cfg = TrainConfig::from_json_file(dir.join("config.json"))?;
            let mut model = Model::load(dir.join("model.mgan"))?;
            if mode.as_deref() == Some("inpainters") {
                cfg.inpaint_iters = TrainConfig::default().inpaint_iters;
                log::info!("refitting `{name}` inpainters for {} iterations", cfg.inpaint_iters);
                refit_inpainters(&mut model, &cfg, &synth_dataset(cfg.dataset_size, cfg.seed))?;
                model.save(dir.join("model.mgan"))?;
                std::fs::write(dir.join("config.json"), serde_json::to_string_pretty(&cfg)? + "\n")?;
            }
            write_metrics(&dir, &cfg, &model)?;
            continue;
        }
        log::info!("training `{name}` for {} iterations into {}", cfg.iters, dir.display());
        let samples = synth_dataset(cfg.dataset_size, cfg.seed);
        let run = train(&cfg, samples, Some(&dir))?;
        write_metrics(&dir, &cfg, &run.model)?;
    }
    Ok(())
}
