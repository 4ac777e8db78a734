//! Run a few registered checks and print their reports.

use hklat::verify::{check, render_table, CheckParams, CHECK_IDS};

fn main() -> hklat::Result<()> {
    println!("registered checks: {}", CHECK_IDS.join(", "));
    let mut reports = Vec::new();
    for id in ["disc-group", "lemma-5.4", "remark-8.5"] {
        let params = CheckParams { n: None, seed: Some(1), samples: Some(10), height: None };
        reports.push(check(id, &params)?);
    }
    println!("{}", render_table(&reports));
    println!("{}", reports[0].to_json_line());
    Ok(())
}
