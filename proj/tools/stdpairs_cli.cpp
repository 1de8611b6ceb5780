#include "stdpairs/decomp.hpp"
#include "stdpairs/io.hpp"
#include "stdpairs/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <iostream>

using namespace stdpairs;

namespace {

struct Job {
  std::string matrix;
  std::string ideal;
  std::string other;
  std::string pairs;
  std::string out;
  std::string format = "json";
  std::size_t budget = 0;
  Int bound = 12;
  bool check = false;
};

EngineOptions engine_options(const Job &job) {
  EngineOptions o;
  if (job.budget > 0)
    o.solver.step_budget = job.budget;
  return o;
}

ConfigPtr load_config(const Job &job) {
  return Configuration::validate(parse_matrix(read_json_file(job.matrix)));
}

MonomialIdeal load_ideal(const ConfigPtr &config, const std::string &path) {
  if (path.empty())
    throw Error(ErrorKind::ParseError, "this command needs an ideal file");
  return MonomialIdeal::from_degrees(config,
                                     parse_generators(read_json_file(path)));
}

void emit(const Job &job, const Json &json, const std::string &text) {
  std::string body = job.format == "text" ? text : json.dump(2) + "\n";
  if (job.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(job.out);
  if (!f)
    throw Error(ErrorKind::ParseError, "cannot write " + job.out);
  f << body;
}

// The standard pairs must cover exactly the standard monomials up to the
// sampling bound.
void verify_pairs(const MonomialIdeal &ideal, const StandardPairSet &s,
                  Int bound) {
  if (bound <= 0)
    return;
  StdOracle oracle = [&](const IntVec &p) { return !ideal_member(ideal, p); };
  if (auto x = first_mismatch(ideal.config(), s.pairs, oracle, bound))
    throw Error(ErrorKind::NotACover,
                "standard pairs disagree with membership at " +
                    format_vector(*x),
                *x);
}

int run(const std::string &command, const Job &job) {
  auto config = load_config(job);
  const auto options = engine_options(job);

  if (command == "validate") {
    std::ostringstream text;
    text << config->facets().size() << " facets, " << config->faces().size()
         << " faces\n";
    for (std::size_t k = 0; k < config->faces().size(); ++k)
      text << text_face(*config, FaceId{k}) << "\n";
    emit(job, emit_configuration(*config), text.str());
    return 0;
  }
  if (command == "gens-from-pairs") {
    if (job.pairs.empty())
      throw Error(ErrorKind::ParseError, "gens-from-pairs needs --pairs");
    auto s = overlap_classes(*config,
                             parse_pairs(*config, read_json_file(job.pairs)));
    auto ideal = pairs_to_generators(config, s, options);
    if (standard_pairs(ideal, options).pairs != s.pairs)
      throw Error(ErrorKind::ValidationError,
                  "the pairs are not the standard pairs of a monomial ideal");
    emit(job, emit_ideal(ideal), text_ideal(ideal) + "\n");
    return 0;
  }

  auto ideal = load_ideal(config, job.ideal);
  if (command == "std-pairs") {
    auto s = standard_pairs(ideal, options);
    verify_pairs(ideal, s, job.bound);
    emit(job, emit_standard_pairs(*config, s), text_standard_pairs(*config, s));
  } else if (command == "assoc-primes") {
    auto faces = associated_primes(standard_pairs(ideal, options));
    std::string text;
    for (auto f : faces)
      text += text_face(*config, f) + "\n";
    emit(job, emit_faces(*config, faces), text);
  } else if (command == "multiplicity") {
    auto t = multiplicity(ideal, options);
    std::string text;
    for (const auto &[f, n] : t)
      text += text_face(*config, f) + ": " + std::to_string(n) + "\n";
    emit(job, emit_multiplicity(*config, t), text);
  } else if (command == "primary-decomp" || command == "irreducible-decomp") {
    auto report = command == "primary-decomp"
                      ? primary_decomposition(ideal, options)
                      : irreducible_decomposition(ideal, options);
    if (job.check && !check_decomposition(ideal, report, options))
      throw Error(ErrorKind::ValidationError,
                  "the components do not intersect to the ideal");
    emit(job, emit_decomposition(*config, report),
         text_decomposition(*config, report));
  } else if (command == "intersect") {
    auto result = intersect(ideal, load_ideal(config, job.other), options);
    emit(job, emit_ideal(result), text_ideal(result) + "\n");
  } else if (command == "render-2d") {
    auto s = standard_pairs(ideal, options);
    auto svg = render_2d(ideal, s, job.bound);
    Job raw = job;
    raw.format = "text";
    emit(raw, Json{}, svg);
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Standard pairs of monomial ideals in affine semigroup rings"};
  app.require_subcommand(1);
  Job job;

  struct Command {
    const char *name;
    const char *help;
    bool ideal;
  };
  const Command commands[] = {
      {"validate", "check a configuration and list its faces", false},
      {"std-pairs", "standard pairs and overlap classes", true},
      {"assoc-primes", "faces of the associated primes", true},
      {"multiplicity", "multiplicity of each associated prime", true},
      {"primary-decomp", "primary decomposition", true},
      {"irreducible-decomp", "irreducible decomposition", true},
      {"gens-from-pairs", "generators from a set of standard pairs", false},
      {"intersect", "intersection of two ideals", true},
      {"render-2d", "SVG picture for two-row configurations", true},
  };
  for (const auto &c : commands) {
    auto *sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--matrix", job.matrix, "matrix file")->required();
    if (c.ideal)
      sub->add_option("--ideal", job.ideal, "ideal file")->required();
    sub->add_option("--budget", job.budget, "solver step budget");
    sub->add_option("--bound", job.bound,
                    "witness degree bound for verification sampling")
        ->capture_default_str();
    sub->add_option("--format", job.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sub->add_option("--out", job.out, "output file (default: stdout)");
    if (std::string(c.name) == "gens-from-pairs")
      sub->add_option("--pairs", job.pairs, "pair-set file")->required();
    if (std::string(c.name) == "intersect")
      sub->add_option("--other", job.other, "second ideal file")->required();
    if (std::string(c.name).ends_with("decomp"))
      sub->add_flag("--check", job.check,
                    "verify the intersection and irredundancy");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0)
      return app.exit(e);
    std::cout << emit_error(Error(ErrorKind::ParseError, e.what())).dump(2)
              << "\n";
    return 2;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), job);
  } catch (const Error &e) {
    std::cout << emit_error(e).dump(2) << "\n";
    return e.kind() == ErrorKind::ParseError ? 2 : 1;
  }
}
