#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "csm/codegen.hpp"
#include "csm/enumerate.hpp"
#include "csm/json_io.hpp"
#include "csm/parser.hpp"
#include "csm/sequence_file.hpp"
#include "csm/stc.hpp"
#include "csm/validate.hpp"

namespace csm::cli {

namespace {

constexpr const char* kVersion = "csmc 1.0.0";

/// Carries an exit status out of a subcommand.
struct Exit {
  int code;
};

std::string read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << path << '\n';
    throw Exit{kUsageOrIo};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) {
    err << "error: cannot write " << path << '\n';
    throw Exit{kUsageOrIo};
  }
}

/// `allow_empty` lets a model without blocks through, for the emitters.
Model load_model(const std::string& path, std::ostream& err, bool allow_empty = false) {
  const std::string text = read_file(path, err);
  Model raw;
  try {
    raw = parse_csm(text, path);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    throw Exit{kParseError};
  }
  ValidationResult result = validate_model(raw);
  if (allow_empty && raw.blocks.empty() && result.diagnostics.size() == 1 &&
      result.diagnostics.front().code == diag::kEmptyModel) {
    return raw;
  }
  if (!result) {
    for (auto d : result.diagnostics) {
      if (d.span.file != path) d.span.file = path;  // model-wide findings carry no file
      err << to_string(d) << '\n';
    }
    throw Exit{kInvalidModel};
  }
  return std::move(*result.model);
}

TcSequence load_sequence(const std::string& path, std::ostream& err) {
  const std::string text = read_file(path, err);
  try {
    return parse_sequence(text, path);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    throw Exit{kParseError};
  }
}

/// Accepts either a configuration object or a whole verdict document, whose
/// `final` configuration is then used.
Configuration load_configuration(const Interpreter& interp, const std::string& path, std::ostream& err) {
  const std::string text = read_file(path, err);
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.is_object() && j.contains("final") && !j["final"].is_null()) j = j["final"];
    Configuration c = configuration_from_json(j);
    interp.check_configuration(c);
    return c;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << path << ": " << e.what() << '\n';
  } catch (const ConfigError& e) {
    err << "error: " << path << ": " << e.what() << '\n';
  }
  throw Exit{kUsageOrIo};
}

std::string states_line(const Configuration& c) {
  std::string out;
  for (const auto& [block, state] : c.block_states) out += " " + block + ":" + state;
  return out;
}

void print_verdict(const Verdict& v, bool json, std::ostream& out) {
  if (json) {
    out << to_json(v).dump(2) << '\n';
    return;
  }
  if (v.accepted) {
    out << "accepted, quiescent at tick " << *v.quiescent_at << '\n';
    out << "final (start of tick " << v.final->now << "):" << states_line(*v.final) << '\n';
  } else {
    out << "rejected\n" << describe(*v.cause) << '\n';
    out << "last safe (start of tick " << v.last_safe.now << "):" << states_line(v.last_safe) << '\n';
  }
  for (const auto& e : v.trace) out << "  " << e.tick << " " << e.block << " -> " << e.state << '\n';
}

struct VerifyArgs {
  std::string model, sequence, engine = "cycle", from;
  bool json = false, trace = false;
};

int cmd_check(const std::string& path, std::ostream& out, std::ostream& err) {
  const Model m = load_model(path, err);
  out << to_string(summarize(m)) << '\n';
  return kSuccess;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const Model m = load_model(a.model, err);
  const TcSequence seq = load_sequence(a.sequence, err);
  const Interpreter interp(m);
  const Configuration start = a.from.empty() ? interp.initial_configuration() : load_configuration(interp, a.from, err);
  const EngineKind engine = a.engine == "event" ? EngineKind::Event : EngineKind::Cycle;
  const Verdict v = interp.verify_from(start, seq, engine, VerifyOptions{a.trace});
  print_verdict(v, a.json, out);
  return v.accepted ? kSuccess : kRejected;
}

int cmd_emit(const std::string& model, const std::string& output, bool graph, std::ostream& out, std::ostream& err) {
  const Model m = load_model(model, err, true);
  std::string text;
  try {
    text = graph ? emit_graph(m).text : emit_sync_program(m).text;
  } catch (const CodegenError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidModel;
  }
  write_output(output, text, out, err);
  return kSuccess;
}

struct ExpandArgs {
  std::string model, templates, stc, merge, from;
  Tick t0 = 0;
  std::vector<std::string> bindings;
  bool admit = false, json = false;
};

int cmd_expand(const ExpandArgs& a, std::ostream& out, std::ostream& err) {
  const Model m = load_model(a.model, err);
  const std::string library_text = read_file(a.templates, err);

  StcRequest request{a.stc, a.t0, {}};
  for (const auto& b : a.bindings) {
    const auto eq = b.find('=');
    std::uint64_t value = 0;
    try {
      std::size_t used = 0;
      if (eq == std::string::npos) throw std::invalid_argument(b);
      value = std::stoull(b.substr(eq + 1), &used);
      if (used != b.size() - eq - 1) throw std::invalid_argument(b);
    } catch (const std::exception&) {
      err << "error: --bind expects NAME=VALUE, got " << b << '\n';
      return kUsageOrIo;
    }
    request.bindings[b.substr(0, eq)] = value;
  }

  TcSequence plan;
  try {
    const auto library = parse_templates(library_text);
    for (const auto& w : lint_templates(m, library)) err << "warning: " << w << '\n';
    plan = expand_stc(m, library, request);
  } catch (const StcError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrIo;
  }
  if (!a.merge.empty()) plan = merge_plans(load_sequence(a.merge, err), plan);
  out << print_sequence(plan);

  if (!a.admit) return kSuccess;
  const Interpreter interp(m);
  const Configuration start = a.from.empty() ? interp.initial_configuration() : load_configuration(interp, a.from, err);
  const Verdict v = interp.verify_from(start, plan);
  if (a.json) {
    err << to_json(v).dump(2) << '\n';
  } else if (v.accepted) {
    err << "admitted, quiescent at tick " << *v.quiescent_at << '\n';
  } else {
    err << "not admitted: " << describe(*v.cause) << '\n';
  }
  return v.accepted ? kSuccess : kRejected;
}

struct EnumArgs {
  std::string model;
  EnumerationBounds bounds;
  bool json = false;
};

int cmd_enum_errors(const EnumArgs& a, std::ostream& out, std::ostream& err) {
  const Model m = load_model(a.model, err);
  std::vector<MinimalError> errors;
  try {
    errors = enumerate_min_errors(m, a.bounds);
  } catch (const EnumerationOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrIo;
  }
  if (a.json) {
    out << to_json(errors).dump(2) << '\n';
    return kSuccess;
  }
  for (const auto& e : errors) {
    std::string seq;
    for (const auto& tc : e.sequence) seq += (seq.empty() ? "" : ", ") + to_string(tc);
    out << seq << " => " << to_string(e.cause.kind) << ": " << describe(e.cause) << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compact Satellite Model toolchain", "csmc"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string check_model;
  auto* check = app.add_subcommand("check", "Parse and validate a model");
  check->add_option("model", check_model, "CSM file")->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Verify a TC sequence against a model");
  verify->add_option("model", verify_args.model, "CSM file")->required();
  verify->add_option("sequence", verify_args.sequence, "TC sequence file")->required();
  verify->add_option("--engine", verify_args.engine, "cycle or event")->check(CLI::IsMember({"cycle", "event"}));
  verify->add_option("--from", verify_args.from, "Start configuration (JSON)");
  verify->add_flag("--json", verify_args.json, "Print the verdict as JSON");
  verify->add_flag("--trace", verify_args.trace, "Include per-tick state changes");

  std::string dot_model, dot_out, sync_model, sync_out;
  auto* dot = app.add_subcommand("dot", "Emit the Graphviz rendering");
  dot->add_option("model", dot_model, "CSM file")->required();
  dot->add_option("-o,--output", dot_out, "Output file (default: stdout)");
  auto* sync = app.add_subcommand("sync", "Emit the Lustre program");
  sync->add_option("model", sync_model, "CSM file")->required();
  sync->add_option("-o,--output", sync_out, "Output file (default: stdout)");

  ExpandArgs expand_args;
  auto* expand = app.add_subcommand("expand", "Expand an STC into a TC sequence");
  expand->add_option("model", expand_args.model, "CSM file")->required();
  expand->add_option("templates", expand_args.templates, "STC template library (JSON)")->required();
  expand->add_option("--stc", expand_args.stc, "Template name")->required();
  expand->add_option("--t0", expand_args.t0, "Start tick")->required();
  expand->add_option("--bind", expand_args.bindings, "Parameter binding NAME=VALUE");
  expand->add_option("--merge", expand_args.merge, "Existing plan to merge into");
  expand->add_flag("--admit", expand_args.admit, "Verify the resulting plan");
  expand->add_option("--from", expand_args.from, "Start configuration for --admit (JSON)");
  expand->add_flag("--json", expand_args.json, "Print the admission verdict as JSON");

  EnumArgs enum_args;
  auto* enum_errors = app.add_subcommand("enum-errors", "List minimal TC sequences that lead to an error");
  enum_errors->add_option("model", enum_args.model, "CSM file")->required();
  enum_errors->add_option("--max-tcs", enum_args.bounds.max_tcs, "Longest sequence")->required();
  enum_errors->add_option("--max-gap", enum_args.bounds.max_gap, "Largest gap between consecutive dates")->required();
  enum_errors->add_option("--deltas", enum_args.bounds.deltas, "Delta values for tcd, comma separated")
      ->delimiter(',')
      ->required();
  enum_errors->add_option("--max-candidates", enum_args.bounds.max_candidates, "Search bound per depth");
  enum_errors->add_flag("--json", enum_args.json, "Print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageOrIo;
  }

  try {
    if (*check) return cmd_check(check_model, out, err);
    if (*verify) return cmd_verify(verify_args, out, err);
    if (*dot) return cmd_emit(dot_model, dot_out, true, out, err);
    if (*sync) return cmd_emit(sync_model, sync_out, false, out, err);
    if (*expand) return cmd_expand(expand_args, out, err);
    if (*enum_errors) return cmd_enum_errors(enum_args, out, err);
  } catch (const Exit& e) {
    return e.code;
  }
  return kUsageOrIo;
}

}  // namespace csm::cli
