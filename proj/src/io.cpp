#include "hornex/io.hpp"

#include "hornex/detail/overloaded.hpp"
#include "hornex/errors.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace hornex {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::int64_t> to_int(std::string_view tok) {
  std::int64_t v = 0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return v;
}

std::int64_t expect_int(std::string_view tok, std::size_t line) {
  auto v = to_int(tok);
  if (!v) throw InputError("expected an integer, got '" + std::string(tok) + "'", line);
  return *v;
}

// Calls fn(line_number, line) for each line of `text`.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!fn(line_no, line)) return;
    pos = end + 1;
  }
}

std::size_t parse_universe(std::string_view tok, std::size_t line) {
  auto w = expect_int(tok, line);
  if (w < 1) throw InputError("universe size must be positive", line);
  return static_cast<std::size_t>(w);
}

}  // namespace

HornInstance parse_native(std::string_view text) {
  std::optional<std::size_t> w;
  std::vector<RawConstraint> raw;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) return true;
    const auto keyword = toks.front();
    if (keyword == "vars") {
      if (w) throw InputError("duplicate 'vars' header", line_no);
      if (toks.size() != 2) throw InputError("expected 'vars <w>'", line_no);
      w = parse_universe(toks[1], line_no);
      return true;
    }
    if (!w) throw InputError("missing 'vars <w>' header before first constraint", line_no);
    RawConstraint rc;
    rc.line = line_no;
    if (keyword == "imp") {
      rc.kind = RawConstraint::Kind::kImplication;
      bool seen_arrow = false;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i] == "->") {
          if (seen_arrow) throw InputError("more than one '->'", line_no);
          seen_arrow = true;
          continue;
        }
        (seen_arrow ? rc.conclusion : rc.premise).push_back(expect_int(toks[i], line_no));
      }
      if (!seen_arrow) throw InputError("implication without '->'", line_no);
    } else if (keyword == "nc") {
      rc.kind = RawConstraint::Kind::kNegativeClause;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        rc.premise.push_back(expect_int(toks[i], line_no));
      }
    } else {
      throw InputError("unknown keyword '" + std::string(keyword) + "'", line_no);
    }
    raw.push_back(std::move(rc));
    return true;
  });
  if (!w) throw InputError("missing 'vars <w>' header");
  return normalize(raw, *w);
}

HornInstance parse_dimacs(std::string_view text) {
  std::optional<std::size_t> w;
  std::vector<RawConstraint> raw;
  std::vector<std::int64_t> pending;
  std::size_t pending_line = 0;
  std::size_t clause_no = 0;

  auto finish_clause = [&](std::size_t line_no) {
    ++clause_no;
    RawConstraint rc;
    rc.line = pending_line ? pending_line : line_no;
    std::size_t positives = 0;
    for (auto lit : pending) {
      if (lit > 0) {
        ++positives;
        rc.conclusion.push_back(lit);
      } else {
        rc.premise.push_back(-lit);
      }
    }
    if (positives > 1) {
      std::string lits;
      for (auto lit : pending) lits += std::to_string(lit) + ' ';
      throw InputError("clause " + std::to_string(clause_no) + " (" + lits +
                           "0) is not Horn: it has " + std::to_string(positives) +
                           " positive literals",
                       rc.line);
    }
    if (pending.empty()) {
      throw UnsatisfiableInput("clause " + std::to_string(clause_no) + " is empty", rc.line);
    }
    rc.kind = positives ? RawConstraint::Kind::kImplication
                        : RawConstraint::Kind::kNegativeClause;
    raw.push_back(std::move(rc));
    pending.clear();
    pending_line = 0;
  };

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    auto toks = split_ws(line);
    if (toks.empty()) return true;
    if (toks.front() == "c" || toks.front().front() == 'c') return true;
    if (toks.front() == "%") return false;  // SATLIB trailer
    if (toks.front() == "p") {
      if (w) throw InputError("duplicate problem line", line_no);
      if (toks.size() != 4 || toks[1] != "cnf") {
        throw InputError("expected 'p cnf <vars> <clauses>'", line_no);
      }
      w = parse_universe(toks[2], line_no);
      if (expect_int(toks[3], line_no) < 0) throw InputError("negative clause count", line_no);
      return true;
    }
    if (!w) throw InputError("missing 'p cnf' header before first clause", line_no);
    for (auto tok : toks) {
      auto lit = expect_int(tok, line_no);
      if (lit == 0) {
        finish_clause(line_no);
      } else {
        if (pending.empty()) pending_line = line_no;
        pending.push_back(lit);
      }
    }
    return true;
  });
  if (!w) throw InputError("missing 'p cnf' header");
  if (!pending.empty()) finish_clause(pending_line);
  return normalize(raw, *w);
}

HornInstance parse(std::string_view text, Format format) {
  return format == Format::kNative ? parse_native(text) : parse_dimacs(text);
}

std::string serialize(const HornInstance& inst, Format format) {
  std::ostringstream out;
  if (format == Format::kNative) {
    out << "vars " << inst.w() << '\n';
    for (const auto& c : inst.constraints()) {
      std::visit(detail::Overloaded{[&](const Implication& i) {
                                      out << "imp";
                                      for (Var v : i.premise) out << ' ' << v;
                                      out << " ->";
                                      for (Var v : i.conclusion) out << ' ' << v;
                                      out << '\n';
                                    },
                                    [&](const NegativeClause& n) {
                                      out << "nc";
                                      for (Var v : n.body) out << ' ' << v;
                                      out << '\n';
                                    }},
                 c);
    }
    return out.str();
  }

  std::size_t clauses = 0;
  for (const auto& c : inst.constraints()) {
    auto* i = std::get_if<Implication>(&c);
    clauses += i ? i->conclusion.size() : 1;
  }
  out << "p cnf " << inst.w() << ' ' << clauses << '\n';
  for (const auto& c : inst.constraints()) {
    std::visit(detail::Overloaded{[&](const Implication& i) {
                                    for (Var b : i.conclusion) {
                                      for (Var a : i.premise) out << '-' << a << ' ';
                                      out << b << " 0\n";
                                    }
                                  },
                                  [&](const NegativeClause& n) {
                                    for (Var a : n.body) out << '-' << a << ' ';
                                    out << "0\n";
                                  }},
               c);
  }
  return out.str();
}

HornInstance load(std::string_view text, Format format, const LoadOptions& options) {
  HornInstance inst = parse(text, format);
  if (options.merge_premises) inst = merge_premises(inst);
  if (options.reorder_by_size) inst = reorder_by_size(inst);
  return inst;
}

}  // namespace hornex
