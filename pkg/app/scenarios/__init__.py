from app.scenarios.document import (
    ScenarioConfig,
    canonical_json,
    load_scenario,
    parse_scenario,
)
