// Table and report rendering: m2-style diagrams, csv, and versioned JSON.
#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "betti/asymptotics.hpp"
#include "betti/betti_table.hpp"
#include "betti/boij_soderberg.hpp"

namespace betti {

enum class OutputFormat { M2, Csv, Json };

OutputFormat parse_format(const std::string& name);

// m2: column header = homological indices, row label = display row j - i,
// "-" for zero entries.
std::string render_table(const BettiTable& T, OutputFormat format);

nlohmann::json table_to_json(const BettiTable& T);
BettiTable table_from_json(const nlohmann::json& j);

nlohmann::json fit_to_json(const FitResult& f);
nlohmann::json report_to_json(const SeriesReport& rep);
SeriesReport report_from_json(const nlohmann::json& j);

nlohmann::json decomposition_to_json(const Decomposition& dec);
std::string render_decomposition(const Decomposition& dec, OutputFormat format);

}  // namespace betti
