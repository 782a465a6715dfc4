#include "homalg/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "homalg/construct.hpp"
#include "homalg/errors.hpp"
#include "homalg/gallery.hpp"
#include "homalg/verify.hpp"

namespace homalg {

namespace {

bool read_text(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

bool write_text(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

/// A record standing for a file that could not be loaded.
CheckRecord load_failure(const std::string& path, const std::string& check, const std::string& message) {
  CheckRecord r;
  r.file = path;
  r.check = check;
  r.status = CheckStatus::Fail;
  r.message = message;
  return r;
}

int verify_command(const std::string& path, const VerifyOptions& options, bool as_json, std::ostream& out,
                   std::ostream& err) {
  StructureFile f;
  if (const int code = load_file(path, f, err)) return code;
  Report r;
  try {
    r = verify(f, options);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  out << (as_json ? render_json(r) : render_text(r));
  return r.ok() ? kExitPass : kExitCheckFailure;
}

int report_command(const std::vector<std::string>& paths, bool as_json, std::ostream& out, std::ostream& err) {
  Report all;
  int worst = kExitPass;
  auto note = [&worst](int code) {
    // Parse errors dominate validation errors, which dominate check failures.
    if (worst == kExitPass || (code != kExitPass && code < worst)) worst = code;
  };
  for (const auto& path : paths) {
    std::ostringstream diag;
    StructureFile f;
    const int code = load_file(path, f, diag);
    if (code != kExitPass) {
      all.records.push_back(load_failure(path, code == kExitParse ? "parse" : "validation", diag.str()));
      note(code);
      continue;
    }
    VerifyOptions options;
    options.file_label = path;
    const Report r = verify(f, options);
    if (!r.ok()) note(kExitCheckFailure);
    all.append(r);
  }
  (void)err;
  out << (as_json ? render_json(all) : render_text(all));
  return worst;
}

ConstructArgs parse_args(const std::vector<std::string>& pairs) {
  ConstructArgs args;
  for (const auto& p : pairs) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("--arg expects key=value, got '" + p + "'");
    args[p.substr(0, eq)] = p.substr(eq + 1);
  }
  return args;
}

int construct_command(const std::string& construction, const std::string& path,
                      const std::vector<std::string>& pairs, const std::string& out_path, std::ostream& out,
                      std::ostream& err) {
  StructureFile f;
  if (const int code = load_file(path, f, err)) return code;
  try {
    const ConstructArgs args = parse_args(pairs);
    const StructureFile result = construct(f, construction, args);
    if (!write_text(out_path, serialize(result), err)) return kExitUsage;
    out << "wrote " << result.objects.back().name << " (" << to_string(result.objects.back().kind) << ") to "
        << out_path << "\n";
    return kExitPass;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << "construction failed: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}

}  // namespace

int load_file(const std::string& path, StructureFile& file, std::ostream& err) {
  std::string text;
  if (!read_text(path, text)) {
    err << "parse error: cannot read " << path << "\n";
    return kExitParse;
  }
  try {
    file = parse_structure_file(text);
    return kExitPass;
  } catch (const ParseError& e) {
    err << "parse error: " << path << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "validation error: " << path << ": " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << "validation error: " << path << ": " << e.what() << "\n";
    return kExitValidation;
  }
}

int run_homcheck(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify and construct finite-dimensional Hom-structures"};
  app.require_subcommand(1);

  std::string file, object, check;
  bool as_json = false, fail_fast = false;
  auto* verify_cmd = app.add_subcommand("verify", "run every applicable check on a file");
  verify_cmd->add_option("file", file, "structure file")->required();
  verify_cmd->add_option("--object", object, "only this object");
  verify_cmd->add_option("--check", check, "only this check");
  verify_cmd->add_flag("--json", as_json, "machine-readable report");
  verify_cmd->add_flag("--fail-fast", fail_fast, "stop at the first failure");

  std::string construction, out_path;
  std::vector<std::string> pairs;
  auto* construct_cmd = app.add_subcommand("construct", "apply a construction and write the result");
  construct_cmd->add_option("construction", construction, "construction name")
      ->required()
      ->check(CLI::IsMember(construction_names()));
  construct_cmd->add_option("file", file, "input structure file")->required();
  construct_cmd->add_option("out", out_path, "output structure file")->required();
  construct_cmd->add_option("--arg", pairs, "key=value argument")->allow_extra_args(false);

  std::vector<std::string> files;
  auto* report_cmd = app.add_subcommand("report", "aggregate verification of several files");
  report_cmd->add_option("files", files, "structure files")->required();
  report_cmd->add_flag("--json", as_json, "machine-readable report");

  std::string name, output;
  auto* gallery_cmd = app.add_subcommand("gallery", "built-in examples");
  gallery_cmd->require_subcommand(1);
  auto* list_cmd = gallery_cmd->add_subcommand("list", "list example names");
  auto* emit_cmd = gallery_cmd->add_subcommand("emit", "print an example file");
  emit_cmd->add_option("name", name, "example name")->required();
  emit_cmd->add_option("-o,--output", output, "write to this file instead of standard output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (*verify_cmd) {
    VerifyOptions options;
    if (!object.empty()) options.object = object;
    if (!check.empty()) options.check = check;
    options.fail_fast = fail_fast;
    return verify_command(file, options, as_json, out, err);
  }
  if (*construct_cmd) return construct_command(construction, file, pairs, out_path, out, err);
  if (*report_cmd) return report_command(files, as_json, out, err);
  if (*list_cmd) {
    for (const auto& n : gallery_names()) out << n << "\n";
    return kExitPass;
  }
  if (*emit_cmd) {
    try {
      const std::string text = serialize(build_example(name));
      if (output.empty()) {
        out << text;
        return kExitPass;
      }
      return write_text(output, text, err) ? kExitPass : kExitUsage;
    } catch (const UnknownExample& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace homalg
