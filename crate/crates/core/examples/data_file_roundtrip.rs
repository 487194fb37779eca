//! Writes a data file, reads it back, validates it and runs the full report.

use hypersymplectic::algebra::DataFile;
use hypersymplectic::families::kodaira_data;
use hypersymplectic::report::{to_json, verify_all};

fn main() -> anyhow::Result<()> {
    let path = std::env::temp_dir().join("kodaira_n1.json");
    std::fs::write(&path, DataFile::from_data(&kodaira_data(1)?).to_json())?;
    println!("wrote {}", path.display());

    let data = DataFile::read(&path)?.to_data()?;
    println!("{}", data.report());
    let report = verify_all(&data)?;
    println!("step {}, flat {}, centre dim {}", report.step, report.flat, report.centre_dim);
    let text = to_json(&report);
    println!("report is {} bytes; first lines:", text.len());
    for line in text.lines().take(6) {
        println!("  {line}");
    }
    Ok(())
}
