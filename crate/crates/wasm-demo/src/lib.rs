//! Browser bindings for the demo page in `www/`. Each export runs one
//! command-line invocation and returns its text output.

use wasm_bindgen::prelude::*;

/// Parameters of a family member; unset fields are left off the command line.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub n: Option<u32>,
    pub i: Option<u32>,
    pub j: Option<u32>,
    pub m: Option<u32>,
    pub kind: Option<u32>,
    pub series: Option<u32>,
}

impl Params {
    fn push_flags(&self, argv: &mut Vec<String>) {
        let flags = [
            ("--n", self.n),
            ("--i", self.i),
            ("--j", self.j),
            ("--m", self.m),
            ("--type", self.kind),
            ("--series", self.series),
        ];
        for (flag, v) in flags {
            if let Some(v) = v {
                argv.push(flag.into());
                argv.push(v.to_string());
            }
        }
    }
}

fn call(argv: Vec<String>) -> Result<String, String> {
    let out = tiltrep::cli::run(std::iter::once("tiltrep".to_string()).chain(argv));
    match out.code {
        2 => Err(out.stderr.trim_end().to_string()),
        _ => Ok(out.stdout),
    }
}

pub fn build_text(family: &str, params: &Params, json: bool) -> Result<String, String> {
    let mut argv = vec!["build".to_string(), family.to_string()];
    params.push_flags(&mut argv);
    if json {
        argv.extend(["--format".into(), "json".into()]);
    }
    call(argv)
}

pub fn compare_text(family: &str, params: &Params) -> Result<String, String> {
    let mut argv = vec!["compare".to_string(), family.to_string()];
    params.push_flags(&mut argv);
    call(argv)
}

pub fn tilting_text(target: &str) -> Result<String, String> {
    call(vec!["describe".into(), target.into()])
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn build_family(
    family: &str,
    n: Option<u32>,
    i: Option<u32>,
    j: Option<u32>,
    m: Option<u32>,
    kind: Option<u32>,
    series: Option<u32>,
    json: bool,
) -> Result<String, JsError> {
    js(build_text(
        family,
        &Params {
            n,
            i,
            j,
            m,
            kind,
            series,
        },
        json,
    ))
}

#[wasm_bindgen]
pub fn compare_family(
    family: &str,
    n: Option<u32>,
    i: Option<u32>,
    j: Option<u32>,
    m: Option<u32>,
) -> Result<String, JsError> {
    js(compare_text(
        family,
        &Params {
            n,
            i,
            j,
            m,
            ..Params::default()
        },
    ))
}

#[wasm_bindgen]
pub fn tilting_table(target: &str) -> Result<String, JsError> {
    js(tilting_text(target))
}
