#![no_main]

use libfuzzer_sys::fuzz_target;

use privgraph::dp::{accountant_check, Ledger};
use privgraph::PrivacyBudget;

fuzz_target!(|text: &str| {
    let Ok(ledger) = Ledger::from_json(text) else {
        return;
    };
    let budget = PrivacyBudget::equal_split(1.0).unwrap();
    let _ = accountant_check(&budget, &ledger);
    let _ = ledger.total_spend();
    if ledger.entries().iter().all(|c| c.eps.is_finite()) {
        assert_eq!(Ledger::from_json(&ledger.to_json()).unwrap(), ledger);
    }
});
