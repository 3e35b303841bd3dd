//! Compares reverse-mode gradients with central differences for the core
//! differentiable operators, in f64.

use hairgen::numerics::{grad_check, Probe, Tensor};
use hairgen::orientation::{structural_loss, GaborBank, DEFAULT_TAU};
use hairgen::training::srgb_to_lab;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random(shape: &[usize], rng: &mut ChaCha8Rng) -> Tensor<f64> {
    Tensor::from_fn(shape, |_| rng.random_range(-1.0..1.0))
}

fn main() -> anyhow::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let eps = 1e-4;
    let x = random(&[2, 3, 7, 7], &mut rng);
    let w = random(&[4, 3, 3, 3], &mut rng);
    let b = random(&[4], &mut rng);
    let mask = Tensor::from_fn(&[2, 1, 7, 7], |i| ((i[2] * 3 + i[3]) % 4 != 0) as u8 as f64);

    let conv = grad_check(
        |g, v| {
            let y = g.conv2d(v[0], v[1], Some(v[2]), 1, 1)?;
            let y = g.mul(y, y)?;
            g.mean(y)
        },
        &[x.clone(), w.clone(), b.clone()],
        eps,
        Probe::All,
        &mut rng,
    )?;
    println!("conv2d          {conv:.2e}");

    let pconv = grad_check(
        |g, v| {
            let (y, _) = g.partial_conv2d(v[0], &mask, v[1], Some(v[2]), 2, 1)?;
            let y = g.mul(y, y)?;
            g.mean(y)
        },
        &[x.clone(), w, b],
        eps,
        Probe::All,
        &mut rng,
    )?;
    println!("partial_conv2d  {pconv:.2e}");

    let target = random(&[2, 3, 7, 7], &mut rng);
    let norm = grad_check(
        |g, v| {
            let y = g.instance_norm(v[0])?;
            let t = g.constant(target.clone())?;
            let y = g.mul(y, t)?;
            g.mean(y)
        },
        &[x],
        eps,
        Probe::All,
        &mut rng,
    )?;
    println!("instance_norm   {norm:.2e}");

    let rgb = Tensor::from_fn(&[1, 3, 4, 4], |_| rng.random_range(0.0..1.0));
    let lab = grad_check(
        |g, v| {
            let y = srgb_to_lab(g, v[0])?;
            let y = g.mul(y, y)?;
            g.mean(y)
        },
        &[rgb],
        eps,
        Probe::All,
        &mut rng,
    )?;
    println!("srgb_to_lab     {lab:.2e}");

    let bank = GaborBank::default();
    let img = Tensor::from_fn(&[1, 1, 16, 16], |_| rng.random_range(0.0..1.0));
    let o = random(&[1, 2, 16, 16], &mut rng);
    let m = Tensor::ones(&[1, 1, 16, 16]);
    let ls = grad_check(
        |g, v| structural_loss(g, v[0], &o, &m, &bank, DEFAULT_TAU),
        &[img],
        eps,
        Probe::PerInput(64),
        &mut rng,
    )?;
    println!("structural_loss {ls:.2e}");
    Ok(())
}
