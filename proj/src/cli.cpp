#include "orbimirror/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "orbimirror/selftest.hpp"
#include "orbimirror/serialize.hpp"

namespace orbimirror {

namespace {

const std::map<std::string, Command>& command_names() {
  static const std::map<std::string, Command> names{
      {"basis", Command::Basis},   {"cup", Command::Cup},           {"pairing", Command::Pairing},
      {"smallqc", Command::SmallQC}, {"bside", Command::BSide},     {"mirror", Command::Mirror},
      {"reconstruct", Command::Reconstruct}, {"selftest", Command::Selftest}};
  return names;
}

std::optional<std::int64_t> parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

int status_code(const Report& r) {
  switch (r.status) {
    case Status::Pass: return kExitOk;
    case Status::Fail: return kExitFail;
    case Status::Error: return kExitConsistency;
  }
  return kExitConsistency;
}

}  // namespace

Weights parse_weights(const std::string& text) {
  std::vector<std::int64_t> w;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto value = parse_int(token);
    if (!value) throw std::invalid_argument("weights: '" + token + "' is not an integer");
    if (*value < 1 || *value > kMaxWeight)
      throw std::invalid_argument("weights: " + token + " is outside [1, " + std::to_string(kMaxWeight) + "]");
    w.push_back(*value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Weights(std::move(w));
}

std::int64_t mu_cap() {
  const char* env = std::getenv("ORBIMIRROR_MAX_MU");
  if (!env) return kDefaultMuCap;
  const auto value = parse_int(env);
  if (!value || *value < 1) throw std::invalid_argument("ORBIMIRROR_MAX_MU must be a positive integer");
  return *value;
}

ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbifold quantum cohomology of weighted projective spaces and its Landau-Ginzburg mirror", "orbimirror"};
  std::string command;
  std::string weights;
  std::string format = "json";
  std::int64_t max_length = 7;
  std::string output;
  bool unsafe = false;

  std::vector<std::string> names;
  for (const auto& [name, _] : command_names()) names.push_back(name);
  app.add_option("command", command, "basis | cup | pairing | smallqc | bside | mirror | reconstruct | selftest")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("-w,--weights", weights, "comma-separated weights, e.g. 1,2,2")->required();
  app.add_option("-f,--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--max-length", max_length, "longest multi-index for reconstruct (default 7)");
  app.add_option("-o,--output", output, "write the artifact to this file");
  app.add_flag("--unsafe-large", unsafe, "lift the mu and max-length caps");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {std::nullopt, kExitOk};
  } catch (const CLI::ParseError& e) {
    err << "orbimirror: " << e.what() << "\n";
    return {std::nullopt, kExitInput};
  }

  try {
    RunConfig config{parse_weights(weights), Command::Basis, Format::Json, 7, std::nullopt, false};
    config.command = command_names().at(command);
    config.format = format == "tsv" ? Format::Tsv : Format::Json;
    config.max_length = max_length;
    config.unsafe_large = unsafe;
    if (!output.empty()) config.output = output;
    if (!unsafe) {
      const auto cap = mu_cap();
      if (config.weights.mu() > cap)
        throw std::invalid_argument("mu = " + std::to_string(config.weights.mu()) + " exceeds the cap " + std::to_string(cap) +
                                    " (set ORBIMIRROR_MAX_MU or pass --unsafe-large)");
      if (max_length > kMaxLengthCap)
        throw std::invalid_argument("--max-length " + std::to_string(max_length) + " exceeds the cap " +
                                    std::to_string(kMaxLengthCap));
    }
    if (config.command == Command::Reconstruct && max_length < 3)
      throw std::invalid_argument("--max-length must be at least 3");
    return {std::move(config), kExitOk};
  } catch (const std::invalid_argument& e) {
    err << "orbimirror: " << e.what() << "\n";
    return {std::nullopt, kExitInput};
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Weights& w = config.weights;
  int code = kExitOk;
  Document doc;
  try {
    switch (config.command) {
      case Command::Basis: doc = basis_document(w); break;
      case Command::Cup: doc = cup_document(w); break;
      case Command::Pairing: doc = pairing_document(w); break;
      case Command::SmallQC: doc = smallqc_document(w); break;
      case Command::BSide: doc = bside_document(w); break;
      case Command::Mirror: {
        const Report classical = check_classical(w);
        const Report quantum = check_quantum(w);
        doc = mirror_document(w, classical, quantum);
        code = std::max(status_code(classical), status_code(quantum));
        break;
      }
      case Command::Reconstruct: doc = reconstruct_document(reconstruct(w, config.max_length)); break;
      case Command::Selftest: {
        const Report report = run_selftest(w);
        doc = selftest_document(w, report);
        code = status_code(report);
        break;
      }
    }
  } catch (const ConsistencyError& e) {
    err << "orbimirror: internal consistency error: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const ReconstructionError& e) {
    err << "orbimirror: reconstruction blocked: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const std::invalid_argument& e) {
    err << "orbimirror: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "orbimirror: internal error: " << e.what() << "\n";
    return kExitConsistency;
  }

  const std::string text = config.format == Format::Json ? render_json(doc.json) : render_tsv(doc.tables);
  if (config.output) {
    std::ofstream file(*config.output, std::ios::binary);
    if (!file || !(file << text)) {
      err << "orbimirror: cannot write " << *config.output << "\n";
      return kExitInput;
    }
  } else {
    out << text;
  }
  return code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const ParseOutcome parsed = parse_args(args, out, err);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, out, err);
}

}  // namespace orbimirror
