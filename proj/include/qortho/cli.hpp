#pragma once

// Command-line front end. run_cli() is the whole program minus main(), so
// tests can drive it in-process with string streams.
//
//   qortho moments|orthopoly|recurrence|triangle|hankel FAMILY --n N [--q R]
//   qortho verify FAMILY|all [--max-n D]
//
// Exit codes: 0 success, 1 mathematical mismatch or quasi-definiteness
// failure, 2 usage, parse or pole error.

#include "qortho/format.hpp"
#include "qortho/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qortho::cli {

inline constexpr std::size_t kDefaultCap = 12;
inline constexpr std::size_t kHardCeiling = 20;
inline constexpr std::size_t kDefaultVerifyDepth = 6;

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Request {
  std::string command;
  std::string family;
  std::optional<std::size_t> n;
  std::optional<std::size_t> max_n;
  std::optional<std::string> q;
  std::string method = "det";
  std::string format = "text";
  bool all_methods = false;
};

/// Command output before rendering: JSON payload plus human-readable lines.
struct Document {
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> lines;
  std::vector<std::string> warnings;
  int exit_code = kOk;
};

namespace detail {

struct Context {
  FamilyId id;
  MomentSequence moments;  // already specialized when a q value is given
  std::optional<RationalNumber> q;
  Style style = Style::text;
};

inline std::string indexed(const std::string& name, std::size_t n, Style style) {
  if (style == Style::latex) return name + "_{" + std::to_string(n) + "}";
  return name + "_" + std::to_string(n);
}

inline std::string line(const std::string& lhs, const std::string& rhs, Style style) {
  if (style == Style::latex) return "\\[ " + lhs + " = " + rhs + " \\]";
  return lhs + " = " + rhs;
}

inline QRational at(const QRational& v, const std::optional<RationalNumber>& q) {
  return q ? QRational(v.evaluate(*q)) : v;
}

inline XPolynomial at(const XPolynomial& p, const std::optional<RationalNumber>& q) {
  return q ? evaluate_at(p, *q) : p;
}

inline std::string join(const std::vector<QRational>& v, Style style) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + format(v[i], style);
  return out;
}

inline XPolynomial closed_or_throw(const FamilyId& id, std::size_t n) {
  auto c = closed_poly(id, n);
  if (!c) throw NotAvailableError("no closed form for " + id.name());
  return *c;
}

}  // namespace detail

inline Document cmd_moments(const detail::Context& ctx, std::size_t N) {
  Document doc;
  std::vector<QRational> values;
  for (std::size_t n = 0; n <= N; ++n) {
    values.push_back(ctx.moments(n));
    doc.lines.push_back(detail::line("a(" + std::to_string(n) + ")", format(values.back(), ctx.style), ctx.style));
  }
  doc.results["moments"] = to_json(values);
  return doc;
}

inline XPolynomial orthopoly_by(const detail::Context& ctx, std::size_t n, const std::string& method) {
  if (method == "det") return orthopoly_det(ctx.moments, n);
  if (method == "recurrence") return orthopoly_recur(stieltjes(ctx.moments, n), n);
  if (method == "closed") return detail::at(detail::closed_or_throw(ctx.id, n), ctx.q);
  throw UsageError("unknown method '" + method + "'");
}

inline Document cmd_orthopoly(const detail::Context& ctx, std::size_t n, const std::string& method,
                              bool all_methods) {
  Document doc;
  const std::string lhs = detail::indexed("p", n, ctx.style) + "(x)";
  if (!all_methods) {
    const XPolynomial p = orthopoly_by(ctx, n, method);
    doc.results["method"] = method;
    doc.results["polynomial"] = to_json(p);
    doc.lines.push_back(detail::line(lhs, format(p, ctx.style), ctx.style));
    return doc;
  }
  std::vector<std::pair<std::string, XPolynomial>> got;
  got.emplace_back("det", orthopoly_by(ctx, n, "det"));
  got.emplace_back("recurrence", orthopoly_by(ctx, n, "recurrence"));
  if (closed_poly(ctx.id, n)) got.emplace_back("closed", orthopoly_by(ctx, n, "closed"));
  bool equal = true;
  for (const auto& [name, p] : got) {
    equal = equal && p == got.front().second;
    doc.results[name] = to_json(p);
    doc.lines.push_back(detail::line(lhs + " [" + name + "]", format(p, ctx.style), ctx.style));
  }
  doc.results["equal"] = equal;
  doc.lines.push_back(std::string("methods agree: ") + (equal ? "yes" : "no"));
  if (!equal) doc.exit_code = kMismatch;
  return doc;
}

/// s_0..s_N and t_0..t_{N-1} from Stieltjes and, where known, closed forms;
/// T_0..T_{2N} for aerated-capable families.
inline Document cmd_recurrence(const detail::Context& ctx, std::size_t N) {
  Document doc;
  const RecurrenceTable table = stieltjes(ctx.moments, N + 1);
  std::vector<QRational> t(table.t.begin(), table.t.begin() + static_cast<std::ptrdiff_t>(N));
  auto emit = [&](const std::string& source, const std::string& name, const std::vector<QRational>& v) {
    doc.results[source][name] = to_json(v);
    for (std::size_t k = 0; k < v.size(); ++k)
      doc.lines.push_back(
          detail::line(detail::indexed(name, k, ctx.style), format(v[k], ctx.style), ctx.style) + "  [" + source + "]");
  };
  emit("stieltjes", "s", table.s);
  emit("stieltjes", "t", t);
  if (has_closed_st(ctx.id)) {
    std::vector<QRational> s, tc;
    for (std::size_t k = 0; k <= N; ++k) {
      const auto [sk, tk] = closed_st(ctx.id, k);
      s.push_back(detail::at(sk, ctx.q));
      if (k < N) tc.push_back(detail::at(tk, ctx.q));
    }
    emit("closed", "s", s);
    emit("closed", "t", tc);
  }
  if (has_closed_T(ctx.id)) {
    MomentSequence A = aerated_moments(ctx.id);
    if (ctx.q) A = specialize(A, *ctx.q);
    const RecurrenceTable at = stieltjes(A, 2 * N + 2);
    std::vector<QRational> Ts(at.t.begin(), at.t.begin() + static_cast<std::ptrdiff_t>(2 * N + 1)), Tc;
    for (std::size_t k = 0; k <= 2 * N; ++k) Tc.push_back(detail::at(closed_T(ctx.id, k), ctx.q));
    emit("stieltjes", "T", Ts);
    emit("closed", "T", Tc);
  }
  return doc;
}

inline Document cmd_triangle(const detail::Context& ctx, std::size_t N) {
  Document doc;
  const ExpansionTriangle tri = expansion_triangle(stieltjes(ctx.moments, N), N);
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t n = 0; n <= N; ++n) {
    rows.push_back(to_json(tri.row(n)));
    doc.lines.push_back(detail::line("row " + std::to_string(n), detail::join(tri.row(n), ctx.style), ctx.style));
  }
  doc.results["rows"] = rows;
  return doc;
}

/// d_0..d_N by direct determinant and by the product of t_k.
inline Document cmd_hankel(const detail::Context& ctx, std::size_t N) {
  Document doc;
  std::vector<QRational> direct;
  for (std::size_t n = 0; n <= N; ++n) direct.push_back(hankel_direct(ctx.moments, n));
  doc.results["direct"] = to_json(direct);
  for (std::size_t n = 0; n <= N; ++n)
    doc.lines.push_back(
        detail::line(detail::indexed("d", n, ctx.style), format(direct[n], ctx.style), ctx.style) + "  [direct]");
  try {
    const RecurrenceTable table = stieltjes(ctx.moments, N);
    std::vector<QRational> product;
    for (std::size_t n = 0; n <= N; ++n) product.push_back(hankel_product(table, n));
    doc.results["product"] = to_json(product);
    for (std::size_t n = 0; n <= N; ++n)
      doc.lines.push_back(
          detail::line(detail::indexed("d", n, ctx.style), format(product[n], ctx.style), ctx.style) + "  [product]");
    doc.results["equal"] = product == direct;
    if (product != direct) doc.exit_code = kMismatch;
  } catch (const QuasiDefiniteError& e) {
    doc.results["product"] = nullptr;
    doc.warnings.push_back(std::string("product route unavailable: ") + e.what());
    doc.exit_code = kMismatch;
  }
  return doc;
}

inline Document cmd_verify(const std::string& family, std::size_t depth) {
  Document doc;
  VerificationReport report = family == "all" ? verify_all(depth) : verify_family(parse_family(family), depth);
  doc.results = report.to_json();
  for (const auto& e : report.entries()) {
    if (e.status == CheckStatus::match) continue;
    std::string s = std::string(to_string(e.status)) + ": " + e.family + " n=" + std::to_string(e.n) + " " + e.check;
    if (!e.left.is_null()) s += "\n  left:  " + e.left.dump();
    if (!e.right.is_null()) s += "\n  right: " + e.right.dump();
    doc.lines.push_back(std::move(s));
  }
  doc.lines.push_back("checks: " + std::to_string(report.entries().size()) +
                      ", matches: " + std::to_string(report.count(CheckStatus::match)) +
                      ", mismatches: " + std::to_string(report.mismatches()) +
                      ", skipped: " + std::to_string(report.count(CheckStatus::skipped)));
  doc.exit_code = report.all_match() ? kOk : kMismatch;
  return doc;
}

/// Validates the request, runs the command and returns its document.
/// Throws UsageError, std::invalid_argument and the mathematical errors.
inline Document execute(const Request& req) {
  const std::size_t cap = req.max_n.value_or(kDefaultCap);
  if (cap > kHardCeiling)
    throw UsageError("--max-n " + std::to_string(cap) + " exceeds the hard ceiling " + std::to_string(kHardCeiling));
  std::vector<std::string> warnings;
  if (cap > kDefaultCap)
    warnings.push_back("depth above " + std::to_string(kDefaultCap) + "; expression sizes grow quickly");

  const Style style = req.format == "latex" ? Style::latex : Style::text;
  Document doc;
  if (req.command == "verify") {
    const std::size_t depth = req.max_n ? *req.max_n : req.n.value_or(kDefaultVerifyDepth);
    if (depth > kHardCeiling) throw UsageError("depth exceeds the hard ceiling " + std::to_string(kHardCeiling));
    doc = cmd_verify(req.family, depth);
    doc.parameters["max-n"] = depth;
  } else {
    if (!req.n) throw UsageError("--n is required");
    const std::size_t n = *req.n;
    if (n > cap)
      throw UsageError("--n " + std::to_string(n) + " exceeds the depth cap " + std::to_string(cap) +
                       " (raise it with --max-n, at most " + std::to_string(kHardCeiling) + ")");
    detail::Context ctx{parse_family(req.family), {}, std::nullopt, style};
    ctx.moments = make_family(ctx.id).moments;
    if (req.q) {
      ctx.q = parse_rational(*req.q);
      ctx.moments = specialize(ctx.moments, *ctx.q);
    }
    if (req.command == "moments")
      doc = cmd_moments(ctx, n);
    else if (req.command == "orthopoly")
      doc = cmd_orthopoly(ctx, n, req.method, req.all_methods);
    else if (req.command == "recurrence")
      doc = cmd_recurrence(ctx, n);
    else if (req.command == "triangle")
      doc = cmd_triangle(ctx, n);
    else if (req.command == "hankel")
      doc = cmd_hankel(ctx, n);
    else
      throw UsageError("unknown command '" + req.command + "'");
    doc.parameters["n"] = n;
    doc.parameters["q"] = ctx.q ? nlohmann::json(to_fraction_string(*ctx.q)) : nlohmann::json(nullptr);
    if (req.command == "orthopoly") {
      doc.parameters["method"] = req.method;
      doc.parameters["all-methods"] = req.all_methods;
    }
  }
  doc.warnings.insert(doc.warnings.begin(), warnings.begin(), warnings.end());
  return doc;
}

inline nlohmann::json document_json(const Request& req, const Document& doc) {
  return {{"schema-version", kSchemaVersion},
          {"command", req.command},
          {"family", req.family},
          {"parameters", doc.parameters},
          {"results", doc.results}};
}

/// The full program: parses argv, runs, renders, and returns the exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact orthogonal polynomials for q-analogue moment sequences", "qortho"};
  app.require_subcommand(1);
  Request req;

  auto common = [&](CLI::App* sc, bool verify) {
    sc->add_option("family", req.family, verify ? "family spec or 'all'" : "family spec, e.g. q-factorial:m=1")
        ->required();
    sc->add_option("--n", req.n, verify ? "verification depth (same as --max-n)" : "index or depth");
    sc->add_option("--max-n", req.max_n,
                   verify ? "verification depth (default 6, at most 20)" : "depth cap (default 12, at most 20)");
    sc->add_option("--format", req.format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    if (!verify) sc->add_option("--q", req.q, "evaluate at this rational value of q");
  };
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"moments", "moments a(0..n)"},
      {"orthopoly", "monic orthogonal polynomial p_n"},
      {"recurrence", "recurrence coefficients s, t and aerated T"},
      {"triangle", "expansion coefficients a(n,k) for rows 0..n"},
      {"hankel", "Hankel determinants d_0..d_n by two routes"},
      {"verify", "cross-check closed forms against the oracles"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sc = app.add_subcommand(name, help);
    common(sc, name == "verify");
    if (name == "orthopoly") {
      sc->add_option("--method", req.method, "det, recurrence or closed")
          ->check(CLI::IsMember({"det", "recurrence", "closed"}));
      sc->add_flag("--all-methods", req.all_methods, "compute with every method and compare");
    }
    sc->callback([&req, name = name] { req.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    const Document doc = execute(req);
    for (const auto& w : doc.warnings) err << "warning: " << w << "\n";
    if (req.format == "json") {
      out << document_json(req, doc).dump(2) << "\n";
    } else {
      for (const auto& l : doc.lines) out << l << "\n";
    }
    return doc.exit_code;
  } catch (const QuasiDefiniteError& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << " q = " << req.q.value_or("?") << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace qortho::cli
