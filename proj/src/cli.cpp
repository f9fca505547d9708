#include "semiholes/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "semiholes/errors.hpp"
#include "semiholes/io.hpp"
#include "semiholes/models.hpp"

namespace semiholes {

namespace {

struct Input {
  std::string file;
  bool transpose = false;
  std::string lattice = "ambient";
};

void add_input(CLI::App* cmd, Input& input, bool with_lattice = true) {
  cmd->add_option("file", input.file, "matrix file, '-' for stdin")->required();
  cmd->add_flag("--transpose", input.transpose, "generators are the rows of the file");
  if (with_lattice)
    cmd->add_option("--lattice", input.lattice, "ambient (Z^m within the span) or generated (the columns' lattice)")
        ->check(CLI::IsMember({"ambient", "generated"}));
}

IntMat read_matrix(const Input& input, std::istream& in) {
  std::string text;
  if (input.file == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(input.file);
    if (!f) throw InvalidArgument("cannot read " + input.file);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  IntMat A = parse_mat(text);
  return input.transpose ? A.transpose() : A;
}

LatticeMode mode_of(const Input& input) {
  return input.lattice == "generated" ? LatticeMode::Generated : LatticeMode::Ambient;
}

// "3" is a 1-based index into the fundamental holes; anything else is a vector like "1,0,2" or "[1 0 2]".
IntVec resolve_hole(const std::string& choice, const LatticePointSet& F, std::size_t dim) {
  const bool index = !choice.empty() && std::all_of(choice.begin(), choice.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (index && dim != 1) {
    const unsigned long k = std::stoul(choice);
    if (k == 0 || k > F.size())
      throw InvalidArgument("--only-hole " + choice + ": there are " + std::to_string(F.size()) + " fundamental holes");
    return F.points[k - 1];
  }
  std::string s = choice;
  for (char& c : s)
    if (c == ',' || c == '[' || c == ']') c = ' ';
  std::istringstream is(s);
  std::vector<Integer> entries;
  std::string tok;
  while (is >> tok) {
    try {
      entries.emplace_back(tok);
    } catch (const std::invalid_argument&) {
      throw InvalidArgument("--only-hole: not an integer: '" + tok + "'");
    }
  }
  if (entries.size() != dim)
    throw InvalidArgument("--only-hole: expected " + std::to_string(dim) + " entries, got " + std::to_string(entries.size()));
  IntVec v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = entries[i];
  return v;
}

bool is_usage_error(const Error& e) {
  return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidArgument*>(&e) ||
         dynamic_cast<const DimensionMismatch*>(&e) || dynamic_cast<const NotPointed*>(&e) ||
         dynamic_cast<const GcdNotOne*>(&e) || dynamic_cast<const MultiRow*>(&e);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Holes of affine semigroups"};
  app.require_subcommand(1);

  Input input;

  auto* holes = app.add_subcommand("holes", "fundamental holes and the hole families above them");
  add_input(holes, input);
  bool trick = true;
  holes->add_flag("--trick,!--no-trick", trick, "drop columns that fill a hole (default on)");
  std::vector<std::string> only;
  holes->add_option("--only-hole", only, "restrict to a fundamental hole: 1-based index or vector (repeatable)")
      ->allow_extra_args(false);
  long degree = -1;
  auto* degree_opt = holes->add_option("--degree-check", degree, "compare with exhaustive classification up to this degree")
                         ->check(CLI::NonNegativeNumber);
  std::string format = "text";
  holes->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  unsigned jobs = 1;
  holes->add_option("--jobs", jobs, "worker threads")->envname("HASE_JOBS")->check(CLI::PositiveNumber);
  degree_opt->excludes(holes->get_option("--only-hole"));

  auto* fundamental = app.add_subcommand("fundamental", "list the fundamental holes, one per line");
  add_input(fundamental, input);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis of the saturation, one element per line");
  add_input(hilbert, input);

  auto* member = app.add_subcommand("member", "classify a point");
  add_input(member, input);
  std::vector<std::string> point;
  member->add_option("point", point, "entries of the point")->required()->allow_extra_args();
  bool member_status = false;
  member->add_flag("--exit-status", member_status, "exit 1 unless the point is in the semigroup");

  auto* idp = app.add_subcommand("idp", "integer decomposition property of the polytope whose vertices are the columns");
  add_input(idp, input, false);
  bool idp_status = false;
  idp->add_flag("--exit-status", idp_status, "exit 1 if the property fails");

  auto* gen = app.add_subcommand("gen", "print a model matrix");
  gen->require_subcommand(1);
  std::size_t gen_d = 0, gen_n = 0;
  auto* gen_cdem = gen->add_subcommand("cdem", "common diagonal effect model for d x d tables");
  gen_cdem->add_option("d", gen_d)->required();
  auto* gen_lop = gen->add_subcommand("lop", "linear ordering polytope, lifted to height one");
  gen_lop->add_option("n", gen_n)->required();
  bool vertices = false;
  gen_lop->add_flag("--vertices", vertices, "print the vertices instead of the lifted generators");

  auto* frob = app.add_subcommand("frobenius", "Frobenius number of a numerical semigroup");
  std::vector<std::string> gens;
  frob->add_option("generators", gens)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (holes->parsed()) {
      const SemigroupProblem P(read_matrix(input, in), mode_of(input));
      ReportOptions opts;
      opts.use_trick = trick;
      opts.jobs = jobs;
      if (!only.empty()) {
        const LatticePointSet F = fundamental_holes(P);
        for (const auto& s : only) opts.only.push_back(resolve_hole(s, F, P.rows()));
      }
      const HoleReport report = hole_report(P, opts);
      out << render_report(report, format == "json" ? ReportFormat::Json : ReportFormat::Text);
      if (degree >= 0) {
        const DegreeCheck dc = degree_check(P, report, degree);
        err << "degree check up to " << degree << ": " << dc.holes << " holes, " << dc.uncovered.size() << " uncovered, "
            << dc.spurious.size() << " spurious\n";
        for (const auto& h : dc.uncovered) err << "  uncovered " << h << '\n';
        for (const auto& h : dc.spurious) err << "  spurious " << h << '\n';
        if (!dc.ok()) return kExitNegative;
      }
    } else if (fundamental->parsed()) {
      const SemigroupProblem P(read_matrix(input, in), mode_of(input));
      for (const IntVec& f : fundamental_holes(P).points) out << f << '\n';
    } else if (hilbert->parsed()) {
      for (const IntVec& h : saturation_hilbert_basis(read_matrix(input, in), mode_of(input)).elements) out << h << '\n';
    } else if (member->parsed()) {
      const SemigroupProblem P(read_matrix(input, in), mode_of(input));
      IntVec b(point.size());
      for (std::size_t i = 0; i < point.size(); ++i) {
        try {
          b[i] = Integer(point[i]);
        } catch (const std::invalid_argument&) {
          throw InvalidArgument("not an integer: '" + point[i] + "'");
        }
      }
      const PointClass pc = classify_point(P, b);
      out << tag_name(pc.tag);
      if (pc.witness) out << ' ' << *pc.witness;
      out << '\n';
      if (member_status && pc.tag != PointClass::Tag::InQ) return kExitNegative;
    } else if (idp->parsed()) {
      const IntMat V = read_matrix(input, in);
      const IdpResult r = idp_check(polytope_lift(V.columns()));
      out << (r.holds ? "true" : "false") << '\n';
      if (r.certificate) out << "certificate " << *r.certificate << '\n';
      if (idp_status && !r.holds) return kExitNegative;
    } else if (gen_cdem->parsed()) {
      out << render_mat(cdem_matrix(gen_d).matrix);
    } else if (gen_lop->parsed()) {
      const PolytopeInstance P = lop_matrix(gen_n);
      out << render_mat(vertices ? IntMat::from_columns(P.vertices, P.dim) : P.lifted);
    } else if (frob->parsed()) {
      IntMat A(1, gens.size());
      for (std::size_t i = 0; i < gens.size(); ++i) {
        try {
          A(0, i) = Integer(gens[i]);
        } catch (const std::invalid_argument&) {
          throw InvalidArgument("not an integer: '" + gens[i] + "'");
        }
        if (A(0, i) <= 0) throw InvalidArgument("generators must be positive");
      }
      out << frobenius_number(SemigroupProblem(A)) << '\n';
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_usage_error(e) ? kExitUsage : kExitInternal;
  }
  return kExitOk;
}

}  // namespace semiholes
