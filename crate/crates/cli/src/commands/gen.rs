use binbench::synth::{generate_corpus, CorpusConfig, DegradationKind, Profile};

use crate::config::GenConfig;
use crate::failure::{CliResult, Failure};
use crate::GenArgs;

fn parse_intensity(s: &str) -> CliResult<(DegradationKind, f64)> {
    let bad = || {
        let kinds: Vec<_> = DegradationKind::ALL.iter().map(|k| k.name()).collect();
        Failure::params(format!(
            "--intensity expects KIND=VALUE with KIND one of {}, got {s:?}",
            kinds.join(", ")
        ))
    };
    let (k, v) = s.split_once('=').ok_or_else(bad)?;
    let kind = DegradationKind::ALL
        .into_iter()
        .find(|d| d.name() == k)
        .ok_or_else(bad)?;
    let value: f64 = v.parse().map_err(|_| bad())?;
    Ok((kind, value))
}

pub fn run(args: &GenArgs, config: &GenConfig) -> CliResult {
    let profile: Profile = args
        .profile
        .as_deref()
        .or(config.profile.as_deref())
        .unwrap_or("phibc-like")
        .parse()?;
    let defaults = CorpusConfig::default();
    let mut corpus = CorpusConfig {
        profile,
        width: args.width.or(config.width).unwrap_or(defaults.width),
        height: args.height.or(config.height).unwrap_or(defaults.height),
        strokes: args.strokes.or(config.strokes).unwrap_or(defaults.strokes),
        stroke_width_min: args
            .stroke_width_min
            .or(config.stroke_width_min)
            .unwrap_or(defaults.stroke_width_min),
        stroke_width_max: args
            .stroke_width_max
            .or(config.stroke_width_max)
            .unwrap_or(defaults.stroke_width_max),
        intensities: config.intensities.clone(),
    };
    for s in &args.intensity {
        let (k, v) = parse_intensity(s)?;
        corpus.intensities.insert(k, v);
    }
    let n = args.n.or(config.n).unwrap_or(10);
    let seed = args.seed.or(config.seed).unwrap_or(0);

    generate_corpus(n, seed, &corpus, &args.outdir)
        .map_err(|e| Failure::from(e).context(args.outdir.display()))?;
    println!("{}", args.outdir.join("manifest.json").display());
    Ok(())
}
