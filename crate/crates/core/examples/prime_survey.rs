use codeaut::cli::{cmd_survey_prime, summary_table, SurveyConfig};

fn main() -> codeaut::Result<()> {
    let p = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(17);
    let cfg = SurveyConfig {
        workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        ..SurveyConfig::default()
    };
    let records = cmd_survey_prime(p, &cfg)?;
    print!("{}", summary_table(&records));
    let affine = records
        .iter()
        .filter(|r| r.aut_classification == "affine-type")
        .count();
    println!(
        "{affine} of {} cyclic codes of length {p} have affine-type groups",
        records.len()
    );
    Ok(())
}
