#![no_main]

use libfuzzer_sys::fuzz_target;

use privgraph::SynthesisConfig;

fuzz_target!(|text: &str| {
    if let Ok(config) = SynthesisConfig::from_toml(text) {
        let again = SynthesisConfig::from_toml(&config.to_toml()).expect("serialized config reloads");
        assert_eq!(again, config);
    }
});
