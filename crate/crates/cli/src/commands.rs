use std::fmt::Write;
use std::io::Read;

use serde_json::{json, Value};
use syncdfa::avoid::{avoidance_profile, check_lemma3, shortest_avoiding_word, AvoidanceRecord};
use syncdfa::search::{run_search_parallel, SearchParams, SearchReport};
use syncdfa::sync::{bounds, is_synchronizing, shortest_sync_word, SyncResult};
use syncdfa::{format, ratio, Dfa, Error, Word};

use crate::{Failure, OutputMode};

/// Reads an automaton from a path, or standard input for `-`.
pub fn load(path: &str) -> Result<Dfa, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{path}: {e}")))?
    };
    syncdfa::parse_any(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{path}: {}", f.message);
        f
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn word_text(dfa: &Dfa, w: &Word) -> String {
    if w.is_empty() {
        "ε".into()
    } else {
        dfa.render_word(w)
    }
}

fn sync_json(dfa: &Dfa, r: &SyncResult) -> Value {
    json!({
        "synchronizing": r.synchronizing,
        "length": r.length,
        "word": r.shortest_word.as_ref().map(|w| dfa.render_word(w)),
        "letters": r.shortest_word.as_ref().map(Word::letters),
        "final_state": r.final_state.map(|q| dfa.state_name(q)),
    })
}

fn sync_text(dfa: &Dfa, r: &SyncResult) -> String {
    let mut out = format!("synchronizing: {}\n", r.synchronizing);
    if let Some(w) = &r.shortest_word {
        let _ = writeln!(out, "length: {}", w.len());
        let _ = writeln!(out, "word: {}", word_text(dfa, w));
        let _ = writeln!(
            out,
            "final_state: {}",
            dfa.state_name(r.final_state.unwrap())
        );
    }
    out
}

pub fn verify(dfa: &Dfa, mode: OutputMode) -> Result<String, Failure> {
    let strongly_connected = dfa.is_strongly_connected();
    let synchronizing = is_synchronizing(dfa);
    let shortest = match shortest_sync_word(dfa) {
        Ok(r) => Some(r),
        Err(e) if e.is_guard() => None,
        Err(e) => return Err(e.into()),
    };
    let b = bounds(dfa.n() as u64);
    let length = shortest.as_ref().and_then(|r| r.length);
    let within = |bound: u128| length.map(|m| m as u128 <= bound);

    if mode == OutputMode::Json {
        return Ok(pretty(&json!({
            "n": dfa.n(),
            "k": dfa.k(),
            "strongly_connected": strongly_connected,
            "synchronizing": synchronizing,
            "shortest_sync": shortest.as_ref().map(|r| sync_json(dfa, r)),
            "bounds": {
                "cerny": b.cerny,
                "pin_frankl": b.pin_frankl,
                "trahtman_claimed": ratio::format(&b.trahtman_claimed),
            },
            "within_cerny": within(b.cerny),
            "within_pin_frankl": within(b.pin_frankl),
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "states: {}", dfa.n());
    let _ = writeln!(out, "letters: {}", dfa.k());
    let _ = writeln!(out, "strongly_connected: {strongly_connected}");
    let _ = writeln!(out, "synchronizing: {synchronizing}");
    match &shortest {
        None => {
            let _ = writeln!(
                out,
                "shortest_sync_length: skipped (more than {} states)",
                syncdfa::DEFAULT_MAX_STATES
            );
        }
        Some(r) => match &r.shortest_word {
            Some(w) => {
                let _ = writeln!(out, "shortest_sync_length: {}", w.len());
                let _ = writeln!(out, "shortest_sync_word: {}", word_text(dfa, w));
            }
            None => {
                let _ = writeln!(out, "shortest_sync_length: none");
            }
        },
    }
    let _ = writeln!(out, "cerny_bound: {}", b.cerny);
    let _ = writeln!(out, "pin_frankl_bound: {}", b.pin_frankl);
    let _ = writeln!(
        out,
        "trahtman_claimed_bound: {}",
        ratio::format(&b.trahtman_claimed)
    );
    if let (Some(c), Some(p)) = (within(b.cerny), within(b.pin_frankl)) {
        let _ = writeln!(out, "within_cerny: {c}");
        let _ = writeln!(out, "within_pin_frankl: {p}");
    }
    Ok(out)
}

pub fn sync_word(dfa: &Dfa, mode: OutputMode) -> Result<String, Failure> {
    let r = shortest_sync_word(dfa)?;
    Ok(match mode {
        OutputMode::Json => pretty(&sync_json(dfa, &r)),
        _ => sync_text(dfa, &r),
    })
}

fn record_json(dfa: &Dfa, r: &AvoidanceRecord) -> Value {
    let image = r.word.as_ref().map(|w| {
        dfa.image(w)
            .expect("word comes from this automaton")
            .iter()
            .map(|q| dfa.state_name(q))
            .collect::<Vec<_>>()
    });
    json!({
        "state": dfa.state_name(r.state),
        "length": r.length,
        "word": r.word.as_ref().map(|w| dfa.render_word(w)),
        "letters": r.word.as_ref().map(Word::letters),
        "image": image,
    })
}

fn record_text(dfa: &Dfa, r: &AvoidanceRecord) -> String {
    match &r.word {
        Some(w) => format!(
            "{}: length {}, word {}, image {}",
            dfa.state_name(r.state),
            w.len(),
            word_text(dfa, w),
            image_text(dfa, w)
        ),
        None => format!("{}: no avoiding word", dfa.state_name(r.state)),
    }
}

fn image_text(dfa: &Dfa, w: &Word) -> String {
    let names: Vec<String> = dfa
        .image(w)
        .expect("word comes from this automaton")
        .iter()
        .map(|q| dfa.state_name(q))
        .collect();
    format!("{{{}}}", names.join(","))
}

pub fn avoid(dfa: &Dfa, state: Option<&str>, mode: OutputMode) -> Result<String, Failure> {
    match state {
        Some(name) => {
            let q = dfa
                .state_by_name(name)
                .ok_or_else(|| Failure::usage(format!("unknown state `{name}`")))?;
            let r = shortest_avoiding_word(dfa, q)?;
            Ok(match mode {
                OutputMode::Json => pretty(&record_json(dfa, &r)),
                _ => {
                    let mut out = format!("state: {}\n", dfa.state_name(q));
                    match &r.word {
                        Some(w) => {
                            let _ = writeln!(out, "length: {}", w.len());
                            let _ = writeln!(out, "word: {}", word_text(dfa, w));
                            let _ = writeln!(out, "image: {}", image_text(dfa, w));
                        }
                        None => out.push_str("length: none (state is in every image)\n"),
                    }
                    out
                }
            })
        }
        None => {
            let profile = avoidance_profile(dfa)?;
            Ok(match mode {
                OutputMode::Json => pretty(&Value::Array(
                    profile.iter().map(|r| record_json(dfa, r)).collect(),
                )),
                _ => profile.iter().map(|r| record_text(dfa, r) + "\n").collect(),
            })
        }
    }
}

pub fn lemma3(dfa: &Dfa, mode: OutputMode) -> Result<String, Failure> {
    let v = match check_lemma3(dfa) {
        Err(Error::Hypothesis(why)) => {
            return Err(Failure::usage(format!(
                "the lemma applies to strongly connected synchronizing automata: {why}"
            )))
        }
        other => other?,
    };
    let n = dfa.n();
    if mode == OutputMode::Json {
        return Ok(pretty(&json!({
            "n": n,
            "holds": v.holds(),
            "part1_holds": v.part1_holds,
            "part1_violators": v.part1_violators.iter().map(|r| record_json(dfa, r)).collect::<Vec<_>>(),
            "part2_holds": v.part2_holds,
            "part2_failures": v.part2_failures,
            "profile": v.profile.iter().map(|r| record_json(dfa, r)).collect::<Vec<_>>(),
        })));
    }
    let mut out = String::new();
    for r in &v.part1_violators {
        let _ = match r.length {
            Some(m) => writeln!(
                out,
                "VIOLATED (part 1): {} requires length {m} > n={n}",
                dfa.state_name(r.state)
            ),
            None => writeln!(
                out,
                "VIOLATED (part 1): {} has no avoiding word",
                dfa.state_name(r.state)
            ),
        };
    }
    for f in &v.part2_failures {
        let _ = writeln!(
            out,
            "VIOLATED (part 2): k={}: only {} states avoidable within length {}",
            f.k, f.achieved, f.k
        );
    }
    if v.part1_holds {
        let _ = writeln!(
            out,
            "HOLDS (part 1): every state avoidable within length n={n}"
        );
    }
    if v.part2_holds {
        let _ = writeln!(
            out,
            "HOLDS (part 2): for every k < {n}, at least k states avoidable within length k"
        );
    }
    out.push_str("profile:\n");
    for r in &v.profile {
        let _ = writeln!(out, "  {}", record_text(dfa, r));
    }
    Ok(out)
}

pub fn search(params: &SearchParams, workers: usize, mode: OutputMode) -> Result<String, Failure> {
    let report = run_search_parallel(params, workers)?;
    Ok(match mode {
        OutputMode::Json => report.to_json() + "\n",
        _ => search_text(&report),
    })
}

fn search_text(r: &SearchReport) -> String {
    let mut out = String::new();
    let p = &r.params;
    let mode = match p.mode {
        syncdfa::search::Mode::Exhaustive => "exhaustive".to_string(),
        syncdfa::search::Mode::Random { samples, seed } => {
            format!("random ({samples} samples, seed {seed})")
        }
    };
    let _ = writeln!(
        out,
        "n: {}  k: {}  mode: {mode}  dedup: {}",
        p.n, p.k, p.dedup
    );
    let _ = writeln!(out, "total: {}", r.counts.total);
    let _ = writeln!(out, "strongly_connected: {}", r.counts.strongly_connected);
    let _ = writeln!(out, "synchronizing: {}", r.counts.synchronizing);
    let _ = writeln!(out, "analyzed: {}", r.counts.analyzed);
    if let Some(m) = &r.max_sync {
        let _ = writeln!(
            out,
            "max_sync_length: {}  ({})",
            m.length,
            inline(&m.automaton)
        );
    }
    if let Some(m) = &r.max_avoidance {
        let _ = writeln!(
            out,
            "max_avoidance_ratio: {}  (length {} at q{}, {})",
            ratio::format(&m.ratio),
            m.length,
            m.state,
            inline(&m.automaton)
        );
    }
    let _ = writeln!(
        out,
        "lemma3_violations: {}  (part 1: {}, part 2: {})",
        r.lemma3.violations, r.lemma3.part1_violations, r.lemma3.part2_violations
    );
    for w in &r.lemma3.witnesses {
        let _ = writeln!(
            out,
            "  witness: {}  max avoiding length {}",
            inline(&w.automaton),
            w.max_avoiding_length
        );
    }
    let b = &r.bound_check;
    let _ = writeln!(
        out,
        "pin_frankl_ok: {}  cerny_ok: {}",
        b.pin_frankl_ok, b.cerny_ok
    );
    out
}

/// One-line form of the text format: rows separated by `|`.
fn inline(d: &Dfa) -> String {
    d.rows()
        .iter()
        .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" | ")
}

pub fn emit(dfa: &Dfa, mode: OutputMode) -> Result<String, Failure> {
    Ok(match mode {
        OutputMode::Text => format::serialize_dfa(dfa),
        OutputMode::Json => format::to_json(dfa) + "\n",
        OutputMode::Dot => format::to_dot(dfa),
    })
}
