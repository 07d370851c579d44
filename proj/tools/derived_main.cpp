// SPDX-License-Identifier: Apache-2.0
//
// irscf: two-timescale beamforming for IRS-assisted cell-free MIMO
// Copyright (C) 2026 The irscf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// irscf_derived: regenerate the derived-values ledger and diff it.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "irscf/derived.hpp"
#include "irscf/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Regenerates every derived value and compares it against the ledger"};
    std::string ledger = "docs/derived_values.json";
    std::vector<std::string> only;
    bool write = false, list = false;
    app.add_option("--ledger", ledger, "ledger file")->capture_default_str();
    app.add_option("--only", only, "restrict to these record ids");
    app.add_flag("--write", write, "recompute and overwrite the ledger instead of checking it");
    app.add_flag("--list", list, "print the registered ids");
    CLI11_PARSE(app, argc, argv);

    try {
        if (list) {
            for (const auto& id : irscf::derived_ids()) std::cout << id << '\n';
            return 0;
        }
        if (write) {
            std::vector<irscf::DerivedRecord> records;
            for (const auto& id : only.empty() ? irscf::derived_ids() : only) {
                records.push_back(irscf::generate_derived(id));
                std::cout << id << " = " << records.back().value << '\n';
            }
            irscf::save_ledger(records, ledger);
            std::cout << "wrote " << records.size() << " records to " << ledger << '\n';
            return 0;
        }
        int failed = 0, checked = 0;
        for (const auto& rec : irscf::load_ledger(ledger)) {
            if (!only.empty() && std::find(only.begin(), only.end(), rec.id) == only.end()) continue;
            const auto c = irscf::check_record(rec);
            ++checked;
            failed += !c.passed;
            std::cout << (c.passed ? "PASS " : "FAIL ") << rec.id << " ledger=" << rec.value
                      << " regenerated=" << c.regenerated << " kind=" << rec.kind << " tolerance=" << rec.tolerance;
            if (!c.passed) std::cout << " reason: " << c.reason;
            std::cout << '\n';
        }
        std::cout << checked - failed << "/" << checked << " records reproduced\n";
        return failed ? 3 : 0;
    } catch (const irscf::ConfigError& e) {
        nlohmann::ordered_json j;
        j["error"]["kind"] = "config";
        j["error"]["message"] = e.what();
        std::cerr << j.dump() << '\n';
        return 2;
    }
}
