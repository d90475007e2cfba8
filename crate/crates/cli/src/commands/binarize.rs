use std::fs;
use std::path::{Path, PathBuf};

use binbench::binarize::{binarize, su_contrast_stages, BinarizerParams, Method};
use binbench::manifest::{self, Manifest};
use binbench::pnm;
use rayon::prelude::*;

use crate::config::BinarizeConfig;
use crate::failure::{CliResult, Failure};
use crate::BinarizeArgs;

fn parse_method(s: &str) -> CliResult<Method> {
    s.parse().map_err(Failure::from)
}

/// Parameters from `--params`, else the config file, else none.
fn base_params(args: &BinarizeArgs, config: &BinarizeConfig) -> CliResult<Option<BinarizerParams>> {
    if let Some(path) = &args.params {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::params(format!("cannot read params {}: {e}", path.display())))?;
        return BinarizerParams::from_json(&text)
            .map(Some)
            .map_err(|e| Failure::from(e).context(path.display()));
    }
    if let Some(p) = &config.params {
        p.validate()?;
        return Ok(Some(p.clone()));
    }
    Ok(None)
}

pub fn run(args: &BinarizeArgs, config: &BinarizeConfig) -> CliResult {
    let base = base_params(args, config)?;
    match &args.manifest {
        Some(m) => run_batch(args, config, base, m),
        None => run_single(args, config, base),
    }
}

fn run_single(args: &BinarizeArgs, config: &BinarizeConfig, base: Option<BinarizerParams>) -> CliResult {
    let input = args.input.as_ref().expect("clap requires --input");
    let output = args.output.as_ref().expect("clap requires --output");
    if args.method.len() > 1 {
        return Err(Failure::params("single-page mode takes one --method"));
    }
    let flag = args.method.first().or(config.method.as_ref());
    let params = match (flag.map(|s| parse_method(s)).transpose()?, base) {
        (Some(m), Some(p)) => BinarizerParams { method: m, ..p },
        (Some(m), None) => BinarizerParams::for_method(m),
        (None, Some(p)) => p,
        (None, None) => BinarizerParams::default(),
    };

    let img = pnm::read_gray(input)?;
    let mask = binarize(&img, &params)?;
    pnm::write_mask(output, &mask).map_err(|e| Failure::from(e).context(output.display()))?;

    if args.debug {
        if params.method == Method::SuContrast {
            write_stages(&img, &params, output)?;
        } else {
            eprintln!("binbench: --debug only dumps stages for su-contrast");
        }
    }
    Ok(())
}

fn stage_path(output: &Path, stage: &str) -> PathBuf {
    let stem = output.file_stem().unwrap_or_default().to_string_lossy();
    output.with_file_name(format!("{stem}.{stage}.pgm"))
}

fn write_stages(img: &binbench::GrayImage, params: &BinarizerParams, output: &Path) -> CliResult {
    let s = su_contrast_stages(img, params)?;
    let stages = [
        ("contrast", s.contrast.clone()),
        ("high-contrast", s.high_contrast.to_gray()),
        ("text-edges", s.text_edges.to_gray()),
        ("thresholded", s.thresholded.to_gray()),
    ];
    for (name, g) in stages {
        let path = stage_path(output, name);
        pnm::write_pgm(&path, &g).map_err(|e| Failure::from(e).context(path.display()))?;
    }
    eprintln!("stroke width: {}", s.stroke_width);
    Ok(())
}

fn run_batch(
    args: &BinarizeArgs,
    config: &BinarizeConfig,
    base: Option<BinarizerParams>,
    manifest_path: &Path,
) -> CliResult {
    let mut manifest = Manifest::read(manifest_path)
        .map_err(|e| Failure::decode(e.to_string()).context(manifest_path.display()))?;
    let names: Vec<String> = if !args.method.is_empty() {
        args.method.clone()
    } else if let Some(m) = &config.methods {
        m.clone()
    } else {
        Method::ALL.iter().map(|m| m.name().to_string()).collect()
    };
    let mut methods = names.iter().map(|s| parse_method(s)).collect::<CliResult<Vec<_>>>()?;
    methods.dedup();
    let params: Vec<BinarizerParams> = methods
        .iter()
        .map(|&m| match &base {
            Some(p) if p.method == m => p.clone(),
            _ => BinarizerParams::for_method(m),
        })
        .collect();

    let root = manifest_path.parent().unwrap_or(Path::new(""));
    for m in &methods {
        let dir = root.join(&args.outdir).join(m.name());
        fs::create_dir_all(&dir).map_err(|e| Failure::from(e).context(dir.display()))?;
    }

    let results: Vec<CliResult<Vec<(String, String)>>> = manifest
        .images
        .par_iter()
        .map(|entry| {
            let rel = entry.page_path.as_ref().ok_or_else(|| {
                Failure::decode(format!("entry {} has no page_path", entry.id))
            })?;
            let page_path = manifest::resolve(manifest_path, rel);
            let img = pnm::read_gray(&page_path)?;
            let mut written = Vec::with_capacity(params.len());
            for p in &params {
                let mask = binarize(&img, p).map_err(|e| Failure::from(e).context(&entry.id))?;
                let rel = args.outdir.join(p.method.name()).join(format!("{}.pbm", entry.id));
                let out = root.join(&rel);
                pnm::write_pbm(&out, &mask).map_err(|e| Failure::from(e).context(out.display()))?;
                written.push((p.method.name().to_string(), rel.to_string_lossy().replace('\\', "/")));
            }
            Ok(written)
        })
        .collect();

    for (entry, r) in manifest.images.iter_mut().zip(results) {
        entry.methods.extend(r?);
    }
    manifest
        .write(manifest_path)
        .map_err(|e| Failure::from(e).context(manifest_path.display()))?;
    println!("{}", manifest_path.display());
    Ok(())
}
