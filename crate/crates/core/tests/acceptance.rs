//! Acceptance run: one line per criterion. Each criterion runs the library's
//! suite check under its time bound and is then cross-checked against the
//! brute-force oracle in `oracle/`.

mod oracle;

use std::io::Write;
use std::time::{Duration, Instant};

use contingent::fixtures;
use contingent::proof::{check_derivation, parse_derivation, SystemId};
use contingent::search::{
    default_atoms, enumerate_frames, find_countermodel, random_formula, random_model, Modalities,
    Mode,
};
use contingent::suite::{self, ItemResult, SuiteConfig};
use contingent::syntax::{parse, Atom, Formula};
use contingent::transform::{complementation, star_translate, supplement_frame};
use contingent::{Model, PropertySet, SchemaName};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use oracle::{all_frames, has_props, holds_at, small_frames, valid_in_frame, RawFrame, Val};

fn f(text: &str) -> Formula {
    parse(text).unwrap()
}

fn val(pairs: &[(&str, u32)]) -> Val {
    pairs.iter().map(|(a, x)| (a.to_string(), *x)).collect()
}

fn raw_valuation(m: &Model) -> Val {
    m.valuation()
        .iter()
        .map(|(a, x)| (a.name().to_string(), x.0))
        .collect()
}

struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            failures: Vec::new(),
        }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn suite(&mut self, r: &ItemResult, bound: Duration) {
        for d in r.detail.iter().filter(|d| d.starts_with("FAIL")) {
            self.failures.push(d.clone());
        }
        self.require(r.passed, format!("suite item {} failed", r.item));
        self.require(
            r.elapsed < bound,
            format!(
                "took {} ms, bound {} ms",
                r.elapsed.as_millis(),
                bound.as_millis()
            ),
        );
    }
}

// 1 ------------------------------------------------------------------------

fn fixture_models(cfg: &SuiteConfig, out: &mut Outcome) {
    out.suite(
        &suite::criterion_fixture_models(cfg),
        Duration::from_secs(1),
    );

    // Models transcribed independently of the shipped text files: s=bit 0,
    // t=bit 1, u=bit 2.
    let v = RawFrame::new(2, vec![vec![0b01], vec![]]);
    let vi = RawFrame::new(3, vec![vec![0b001, 0b011, 0b111], vec![0b111], vec![0b111]]);
    let vii = RawFrame::new(3, vec![vec![0b110, 0b111], vec![0b111], vec![0b111]]);
    let v_val = val(&[("p", 0b01)]);
    let vi_val = val(&[("p", 0b011), ("q", 0b110)]);
    let vii_val = val(&[("p", 0b001), ("q", 0b010)]);

    for (raw, rv, shipped) in [
        (&v, &v_val, fixtures::item_v()),
        (&vi, &vi_val, fixtures::item_vi()),
        (&vii, &vii_val, fixtures::item_vii()),
    ] {
        out.require(
            RawFrame::from_frame(shipped.frame()) == *raw,
            "shipped frame differs from transcription",
        );
        out.require(
            raw_valuation(&shipped) == *rv,
            "shipped valuation differs from transcription",
        );
    }

    let assertions = [
        (&v, &v_val, "Dp", true),
        (&v, &v_val, "D~p", true),
        (&v, &v_val, "D(p & ~p)", false),
        (&vi, &vi_val, "Dp", true),
        (&vi, &vi_val, "Dq", true),
        (&vi, &vi_val, "D(p & q)", false),
        (&vii, &vii_val, "Dp", true),
        (&vii, &vii_val, "D(p | q)", false),
    ];
    for (fr, v, text, want) in assertions {
        out.require(
            holds_at(fr, v, &f(text), 0) == want,
            format!("oracle: {text} at s"),
        );
    }
    out.require(
        !holds_at(&v, &v_val, &f("Dp & D~p -> D(p & ~p)"), 0),
        "oracle: (v) instance",
    );
    out.require(
        !holds_at(&vi, &vi_val, &f("Dp & Dq -> D(p & q)"), 0),
        "oracle: (vi) instance",
    );
    out.require(
        !holds_at(&vii, &vii_val, &f("Dp -> D(p | q)"), 0),
        "oracle: (vii) instance",
    );
    out.require(
        has_props(&v, "c") && has_props(&vi, "cn"),
        "oracle: (v)/(vi) classes",
    );
    for class in ["mcn", "m", "mc", "mn"] {
        out.require(
            has_props(&vii, class),
            format!("oracle: (vii) is ({class})"),
        );
    }
    out.require(!has_props(&vii, "z"), "oracle: (vii) is not (z)");
}

// 2 ------------------------------------------------------------------------

fn validity_sweep(cfg: &SuiteConfig, out: &mut Outcome) {
    out.suite(
        &suite::criterion_validity_sweep(cfg),
        Duration::from_secs(60),
    );

    let items = [
        (SchemaName::DeltaN, "n"),
        (SchemaName::DeltaM, "m"),
        (SchemaName::DeltaC, "cz"),
        (SchemaName::DeltaC, "mc"),
        (SchemaName::StrongDeltaM, "mz"),
    ];
    for (schema, class) in items {
        let instance = schema.schema().canonical_instance();
        let frames = small_frames(class);
        out.require(
            frames.iter().all(|fr| valid_in_frame(fr, &instance)),
            format!("oracle: {schema} on ({class})"),
        );
        let report = find_countermodel(
            schema,
            &default_atoms(),
            PropertySet::parse(class).unwrap(),
            2,
            Mode::Exhaustive,
        )
        .unwrap();
        out.require(
            report.frames_examined == frames.len() as u64,
            format!(
                "{schema} on ({class}): {} frames searched, oracle counts {}",
                report.frames_examined,
                frames.len()
            ),
        );
    }
    let dc = f("Dp & D~p -> D(p & ~p)");
    let c_frames = small_frames("c");
    out.require(
        c_frames
            .iter()
            .any(|fr| fr.n == 2 && !valid_in_frame(fr, &dc)),
        "oracle: a two-state (c)-frame falsifies dC",
    );
}

// 3 ------------------------------------------------------------------------

fn correspondence(cfg: &SuiteConfig, out: &mut Outcome) {
    out.suite(
        &suite::criterion_correspondence(cfg),
        Duration::from_secs(60),
    );

    let table = [
        ("m", "B(p & q) -> Bp & Bq"),
        ("c", "Bp & Bq -> B(p & q)"),
        ("n", "BT"),
        ("z", "Bp -> B~p"),
    ];
    let frames: Vec<RawFrame> = (1..=2).flat_map(all_frames).collect();
    for (letter, text) in table {
        let formula = f(text);
        let bad = frames
            .iter()
            .filter(|fr| has_props(fr, letter) != valid_in_frame(fr, &formula))
            .count();
        out.require(
            bad == 0,
            format!("oracle: ({letter}) disagrees on {bad} frames"),
        );
    }
}

// 4 ------------------------------------------------------------------------

fn transforms(cfg: &SuiteConfig, out: &mut Outcome) {
    out.suite(&suite::criterion_transforms(cfg), Duration::from_secs(120));

    let atoms: Vec<Atom> = ["p", "q"].iter().map(|a| Atom::new(*a).unwrap()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed);
    let classes: Vec<PropertySet> = PropertySet::all_combinations().collect();
    for i in 0..500 {
        let n = rng.gen_range(2..=5);
        let class = if i % 2 == 0 {
            PropertySet::NONE
        } else {
            classes[rng.gen_range(0..classes.len())]
        };
        let model = random_model(n, class, &atoms, &mut rng).unwrap();
        let raw = RawFrame::from_frame(model.frame());
        let v = raw_valuation(&model);
        let sup = RawFrame::from_frame(&supplement_frame(model.frame()));
        let z = RawFrame::from_frame(&complementation(model.frame()));
        out.require(sup == oracle::supplement(&raw), "oracle: supplementation");
        out.require(z == oracle::complement(&raw), "oracle: complementation");
        let g = random_formula(rng.gen_range(0..=4), &atoms, Modalities::Delta, &mut rng);
        let t = oracle::truth(&raw, &v, &g);
        out.require(
            t == oracle::truth(&z, &v, &g),
            format!("oracle: complementation changes {g}"),
        );
        out.require(
            t == oracle::truth(&raw, &v, &star_translate(&g).unwrap()),
            format!("oracle: star of {g}"),
        );
    }
}

// 5 ------------------------------------------------------------------------

/// Rewrites one connective token in the formula part of one derivation line.
fn mutate_text(text: &str, rng: &mut impl Rng) -> Option<String> {
    let lines: Vec<&str> = text.lines().collect();
    let candidates: Vec<usize> = lines
        .iter()
        .enumerate()
        .filter(|(_, l)| {
            l.trim_start()
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_digit())
        })
        .map(|(i, _)| i)
        .collect();
    let i = candidates[rng.gen_range(0..candidates.len())];
    let line = lines[i];
    let formula_end = line.find("  ")?;
    let start = line.find(". ")? + 2;
    let body = &line[start..formula_end];
    let mut sites = Vec::new();
    let bytes = body.as_bytes();
    let mut k = 0;
    while k < bytes.len() {
        let rest = &body[k..];
        let (len, repl) = if rest.starts_with("<->") {
            (3, "->")
        } else if rest.starts_with("->") {
            (2, "<->")
        } else if rest.starts_with('&') {
            (1, "|")
        } else if rest.starts_with('|') {
            (1, "&")
        } else if rest.starts_with('D') {
            (1, "B")
        } else {
            k += 1;
            continue;
        };
        sites.push((k, len, repl));
        k += len;
    }
    let (at, len, repl) = sites[rng.gen_range(0..sites.len())];
    let new_body = format!("{}{}{}", &body[..at], repl, &body[at + len..]);
    let mut out: Vec<String> = lines.iter().map(|l| l.to_string()).collect();
    out[i] = format!("{}{}{}", &line[..start], new_body, &line[formula_end..]);
    Some(out.join("\n"))
}

fn proofs(cfg: &SuiteConfig, out: &mut Outcome) {
    out.suite(&suite::criterion_proofs(cfg), Duration::from_secs(30));

    let texts = [
        fixtures::DC_TO_DC_PRIME,
        fixtures::DC_PRIME_TO_DC,
        fixtures::DM_TO_DM_PRIME,
        fixtures::DM_PRIME_TO_DM,
    ];
    for text in texts {
        let d = parse_derivation(text).unwrap();
        let letters = d
            .system
            .parse::<SystemId>()
            .unwrap()
            .frame_class()
            .to_string();
        let letters = if letters == "all" {
            String::new()
        } else {
            letters
        };
        let frames = small_frames(&letters);
        for line in &d.lines {
            out.require(
                frames.iter().all(|fr| valid_in_frame(fr, &line.formula)),
                format!(
                    "oracle: {} line {} not valid on ({letters})",
                    d.system, line.index
                ),
            );
        }
    }
    out.require(
        texts
            .iter()
            .filter(|t| t.contains("system: R-delta") || t.contains("system: M-delta+dC'"))
            .count()
            == 2,
        "dC fixtures name R-delta and M-delta+dC'",
    );
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x0bad);
    for _ in 0..100 {
        let text = texts[rng.gen_range(0..texts.len())];
        let Some(mutant) = mutate_text(text, &mut rng) else {
            continue;
        };
        let accepted = parse_derivation(&mutant)
            .map(|d| check_derivation(&d).is_ok())
            .unwrap_or(false);
        out.require(!accepted, format!("oracle mutation accepted:\n{mutant}"));
    }
}

// 6 ------------------------------------------------------------------------

fn equivalences(cfg: &SuiteConfig, out: &mut Outcome) {
    out.suite(&suite::criterion_equivalences(cfg), Duration::from_secs(30));

    let pairs = [
        ("Dp -> D(p | q)", "D(p & q) -> Dp"),
        ("Dp -> D(p | q) | D(~p | r)", "Dp -> D(p -> q) | D(~p -> r)"),
    ];
    let frames: Vec<RawFrame> = (1..=2).flat_map(all_frames).collect();
    for (a, b) in pairs {
        let (a, b) = (f(a), f(b));
        let bad = frames
            .iter()
            .filter(|fr| valid_in_frame(fr, &a) != valid_in_frame(fr, &b))
            .count();
        out.require(
            bad == 0,
            format!("oracle: {a} / {b} differ on {bad} frames"),
        );
    }
}

// 7 ------------------------------------------------------------------------

fn enumeration(cfg: &SuiteConfig, out: &mut Outcome) {
    out.suite(&suite::criterion_enumeration(cfg), Duration::from_secs(60));

    for n in 1..=2usize {
        let closed = (1u64 << (1u32 << n)).pow(n as u32);
        let oracle = all_frames(n).len() as u64;
        let library = enumerate_frames(n, PropertySet::NONE).unwrap().count() as u64;
        out.require(
            closed == oracle && oracle == library,
            format!("size {n}: {closed} / {oracle} / {library}"),
        );
    }
    let searches = [
        (SchemaName::DeltaC, "c", 2, Mode::Exhaustive),
        (SchemaName::StrongDeltaM, "mcn", 3, Mode::Exhaustive),
        (SchemaName::DeltaC, "cn", 3, Mode::Exhaustive),
        (
            SchemaName::StrongDeltaM,
            "mc",
            4,
            Mode::Sample {
                count: 500,
                seed: cfg.seed,
            },
        ),
    ];
    for (schema, class, size, mode) in searches {
        let r = find_countermodel(
            schema,
            &default_atoms(),
            PropertySet::parse(class).unwrap(),
            size,
            mode,
        )
        .unwrap();
        let Some(w) = r.witness() else {
            out.require(false, format!("{schema} on ({class}): no witness"));
            continue;
        };
        let raw = RawFrame::from_frame(w.model.frame());
        out.require(
            has_props(&raw, class),
            format!("oracle: witness for {schema} is not ({class})"),
        );
        out.require(
            !holds_at(&raw, &raw_valuation(&w.model), &r.formula, w.state),
            format!("oracle: witness for {schema} does not falsify"),
        );
    }
    let run = || {
        let mode = Mode::Sample {
            count: 300,
            seed: cfg.seed,
        };
        find_countermodel(
            SchemaName::StrongDeltaM,
            &default_atoms(),
            PropertySet::parse("m").unwrap(),
            4,
            mode,
        )
        .unwrap()
        .machine_line(false)
    };
    out.require(run() == run(), "repeated sampled search differs");
}

type Criterion = fn(&SuiteConfig, &mut Outcome);

fn main() {
    let cfg = SuiteConfig::default();
    let criteria: [(&str, Criterion); 7] = [
        ("fixture models", fixture_models),
        ("bounded validity sweep", validity_sweep),
        ("property correspondence", correspondence),
        ("transform properties", transforms),
        ("proof fixtures", proofs),
        ("validity equivalences", equivalences),
        ("enumeration sanity", enumeration),
    ];
    let mut failed = 0;
    let mut stdout = std::io::stdout().lock();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = Outcome::new();
        run(&cfg, &mut outcome);
        let status = if outcome.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        writeln!(
            stdout,
            "{status} criterion {} {name} ({} ms)",
            i + 1,
            start.elapsed().as_millis()
        )
        .unwrap();
        for failure in &outcome.failures {
            writeln!(stdout, "    {failure}").unwrap();
        }
        failed += !outcome.failures.is_empty() as usize;
    }
    writeln!(
        stdout,
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    )
    .unwrap();
    if failed > 0 {
        std::process::exit(1);
    }
}
