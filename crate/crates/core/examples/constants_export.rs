//! Writes the table of closed-form volumes, hyperareas and probabilities
//! as JSON on stdout.

use sepvol::measures::constants::constant_table;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    serde_json::to_writer_pretty(std::io::stdout().lock(), &constant_table())?;
    println!();
    Ok(())
}
