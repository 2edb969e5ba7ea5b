#include "wordreg/regularity.hpp"

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace wordreg {

std::string_view to_string(Relation rel) noexcept {
  switch (rel) {
    case Relation::Lt: return "lt";
    case Relation::Le: return "le";
    case Relation::Eq: return "eq";
    case Relation::Gt: return "gt";
    case Relation::Ge: return "ge";
    case Relation::Ne: return "ne";
  }
  return "?";
}

Relation parse_relation(std::string_view text) {
  for (Relation rel : {Relation::Lt, Relation::Le, Relation::Eq, Relation::Gt, Relation::Ge,
                       Relation::Ne}) {
    if (text == to_string(rel)) return rel;
  }
  throw Error(Errc::InvalidArgument, "unknown relation '" + std::string(text) + "'");
}

Relation negate(Relation rel) noexcept {
  switch (rel) {
    case Relation::Lt: return Relation::Ge;
    case Relation::Le: return Relation::Gt;
    case Relation::Eq: return Relation::Ne;
    case Relation::Gt: return Relation::Le;
    case Relation::Ge: return Relation::Lt;
    case Relation::Ne: return Relation::Eq;
  }
  return rel;
}

Relation swap_sides(Relation rel) noexcept {
  switch (rel) {
    case Relation::Lt: return Relation::Gt;
    case Relation::Le: return Relation::Ge;
    case Relation::Gt: return Relation::Lt;
    case Relation::Ge: return Relation::Le;
    case Relation::Eq:
    case Relation::Ne: return rel;
  }
  return rel;
}

std::string_view to_string(Direction d) noexcept {
  switch (d) {
    case Direction::XInterlacedByY: return "x-interlaced-by-y";
    case Direction::YInterlacedByX: return "y-interlaced-by-x";
    case Direction::Both: return "both";
  }
  return "?";
}

Word NonRegularityCertificate::pumped(std::size_t i, std::size_t j) const {
  return dec_r.period().power(i) + dec_s.period().power(j);
}

std::size_t NonRegularityCertificate::predicted_x_count(std::size_t j) const {
  return (j - dec_s.e - 1) * d_prime + c_prime + m;
}

std::size_t NonRegularityCertificate::predicted_y_count(std::size_t i) const {
  return (i - dec_r.e - 1) * d + c + n;
}

NotRegularError::NotRegularError(NonRegularityCertificate certificate)
    : Error(Errc::NotRegularInput, "L is not regular for x = \"" + certificate.x.str() +
                                       "\", y = \"" + certificate.y.str() + "\""),
      certificate_(std::move(certificate)) {}

std::size_t straddle_count(const Word& left, const Word& right, const Word& pattern) {
  if (pattern.empty()) throw Error(Errc::EmptyPattern, "pattern must be nonempty");
  const Word joined = left + right;
  const std::size_t first = left.size() + 1 > pattern.size() ? left.size() + 1 - pattern.size() : 0;
  std::size_t count = 0;
  for (std::size_t k = first; k < left.size() && k + pattern.size() <= joined.size(); ++k) {
    if (joined.str().compare(k, pattern.size(), pattern.str()) == 0) ++count;
  }
  return count;
}

RegularityOutcome decide_regularity(const Word& x, const Word& y, const Alphabet& alphabet,
                                    MethodChoice choice) {
  const bool x_by_y = decide_interlacing(x, y, alphabet, choice).holds;
  const bool y_by_x = decide_interlacing(y, x, alphabet, choice).holds;
  if (x_by_y && y_by_x) return RegularityOutcome{true, Direction::Both, std::nullopt};
  if (x_by_y) return RegularityOutcome{true, Direction::XInterlacedByY, std::nullopt};
  if (y_by_x) return RegularityOutcome{true, Direction::YInterlacedByX, std::nullopt};
  return RegularityOutcome{false, std::nullopt, non_regularity_certificate(x, y, alphabet)};
}

namespace {

// Product of the two counting matchers with D = |z|_x - |z|_y tracked in
// {+1, 0, -1}; D <= -2 collapses into an absorbing state. Sound only when x
// is interlaced by y, because then D never reaches +2 and never returns to
// 0 after dropping to -2.
Dfa difference_tracker(const Word& x, const Word& y, const Alphabet& alphabet, Relation rel) {
  const Dfa mx = matcher_automaton(x, alphabet, MatchMode::Counting);
  const Dfa my = matcher_automaton(y, alphabet, MatchMode::Counting);
  const std::size_t k = alphabet.size();

  struct Config {
    State qx;
    State qy;
    int diff;
  };
  constexpr State sticky = 0;
  std::vector<Config> configs{{0, 0, -2}};  // slot 0 is the absorbing state
  std::unordered_map<std::uint64_t, State> index;
  const auto intern = [&](State qx, State qy, int diff) -> State {
    if (diff <= -2) return sticky;
    if (diff >= 2) {
      throw std::logic_error("difference tracker reached +2; x is not interlaced by y");
    }
    const std::uint64_t key =
        (static_cast<std::uint64_t>(qx) * my.state_count() + qy) * 3 + static_cast<unsigned>(diff + 1);
    auto [it, inserted] = index.try_emplace(key, static_cast<State>(configs.size()));
    if (inserted) configs.push_back({qx, qy, diff});
    return it->second;
  };

  const State start = intern(mx.start(), my.start(), 0);
  std::vector<State> transitions(k, sticky);
  for (std::size_t i = 1; i < configs.size(); ++i) {
    const Config cfg = configs[i];
    for (std::size_t a = 0; a < k; ++a) {
      const State qx = mx.next(cfg.qx, a);
      const State qy = my.next(cfg.qy, a);
      const int diff = cfg.diff + (mx.is_marked(qx) ? 1 : 0) - (my.is_marked(qy) ? 1 : 0);
      transitions.push_back(intern(qx, qy, diff));
    }
  }

  std::vector<bool> accepting(configs.size());
  accepting[sticky] = rel != Relation::Eq;
  for (std::size_t i = 1; i < configs.size(); ++i) {
    const int diff = configs[i].diff;
    accepting[i] = rel == Relation::Eq ? diff == 0 : rel == Relation::Lt ? diff < 0 : diff <= 0;
  }
  return Dfa(alphabet, configs.size(), std::move(transitions), start, std::move(accepting));
}

// Requires x interlaced by y.
Dfa build_when_interlaced(const Word& x, const Word& y, const Alphabet& alphabet, Relation rel) {
  switch (rel) {
    case Relation::Lt:
    case Relation::Le:
    case Relation::Eq: return difference_tracker(x, y, alphabet, rel);
    default: return complement(difference_tracker(x, y, alphabet, negate(rel)));
  }
}

}  // namespace

Dfa build_comparison_dfa(const Word& x, const Word& y, const Alphabet& alphabet, Relation rel) {
  auto outcome = decide_regularity(x, y, alphabet);
  if (!outcome.regular) throw NotRegularError(std::move(*outcome.certificate));
  if (*outcome.direction == Direction::YInterlacedByX) {
    return minimize(build_when_interlaced(y, x, alphabet, swap_sides(rel)));
  }
  return minimize(build_when_interlaced(x, y, alphabet, rel));
}

NonRegularityCertificate non_regularity_certificate(const Word& x, const Word& y,
                                                    const Alphabet& alphabet) {
  auto r = shortest_accepted(avoider_automaton(x, y, alphabet));
  auto s = shortest_accepted(avoider_automaton(y, x, alphabet));
  if (!r || !s) {
    throw Error(Errc::CriterionHolds, "an interlacing direction holds; the language is regular");
  }
  NonRegularityCertificate cert;
  cert.x = x;
  cert.y = y;
  cert.r = std::move(*r);
  cert.s = std::move(*s);
  cert.dec_r = decompose_bordered(cert.r, y);
  cert.dec_s = decompose_bordered(cert.s, x);
  const auto cd = power_count_params(cert.dec_r, y);
  const auto cd_prime = power_count_params(cert.dec_s, x);
  cert.c = cd.c;
  cert.d = cd.d;
  cert.c_prime = cd_prime.c;
  cert.d_prime = cd_prime.d;
  const Word left = cert.dec_r.period().power(cert.dec_r.e + 1);
  const Word right = cert.dec_s.period().power(cert.dec_s.e + 1);
  cert.m = straddle_count(left, right, x);
  cert.n = straddle_count(left, right, y);

  if (auto problem = check_certificate(cert); !problem.empty()) {
    throw std::logic_error("certificate self-check failed: " + problem);
  }
  return cert;
}

std::string check_certificate(const NonRegularityCertificate& cert, std::size_t extra_powers) {
  const auto& [u, v, e] = cert.dec_r;
  const auto& [p, q, f] = cert.dec_s;
  if (!is_bordered(cert.r, cert.y)) return "r is not y-bordered";
  if (!is_bordered(cert.s, cert.x)) return "s is not x-bordered";
  if (cert.r.contains(cert.x)) return "r contains x";
  if (cert.s.contains(cert.y)) return "s contains y";
  if (u.empty() || cert.dec_r.border() != cert.y || cert.dec_r.bordered() != cert.r) {
    return "(u, v, e) does not reconstruct y and r";
  }
  if (p.empty() || cert.dec_s.border() != cert.x || cert.dec_s.bordered() != cert.s) {
    return "(p, q, f) does not reconstruct x and s";
  }
  const auto cd = power_count_params(cert.dec_r, cert.y);
  const auto cd_prime = power_count_params(cert.dec_s, cert.x);
  if (cd.c != cert.c || cd.d != cert.d || cert.c < 1 || cert.d < 1) return "c, d are inconsistent";
  if (cd_prime.c != cert.c_prime || cd_prime.d != cert.d_prime || cert.c_prime < 1 ||
      cert.d_prime < 1) {
    return "c', d' are inconsistent";
  }
  const Word uv = u + v;
  const Word pq = p + q;
  if (commutes(uv, pq)) return "uv and pq commute";
  if (straddle_count(uv.power(e + 1), pq.power(f + 1), cert.x) != cert.m) return "m is wrong";
  if (straddle_count(uv.power(e + 1), pq.power(f + 1), cert.y) != cert.n) return "n is wrong";

  for (std::size_t i = e + 1; i <= e + extra_powers; ++i) {
    if (count_occurrences(uv.power(i) + u, cert.x) != 0) return "x occurs in some (uv)^i u";
  }
  for (std::size_t j = f + 1; j <= f + extra_powers; ++j) {
    if (count_occurrences(pq.power(j) + p, cert.y) != 0) return "y occurs in some (pq)^j p";
  }
  for (std::size_t i = e + 1; i <= e + extra_powers; ++i) {
    for (std::size_t j = f + 1; j <= f + extra_powers; ++j) {
      const Word z = cert.pumped(i, j);
      if (count_occurrences(z, cert.x) != cert.predicted_x_count(j)) {
        return "x count formula fails at i=" + std::to_string(i) + ", j=" + std::to_string(j);
      }
      if (count_occurrences(z, cert.y) != cert.predicted_y_count(i)) {
        return "y count formula fails at i=" + std::to_string(i) + ", j=" + std::to_string(j);
      }
    }
  }
  return {};
}

std::string certificate_to_json(const NonRegularityCertificate& cert) {
  using ordered_json = nlohmann::ordered_json;
  const auto decomposition = [](const BorderDecomposition& dec) {
    ordered_json out;
    out["u"] = dec.u.str();
    out["v"] = dec.v.str();
    out["e"] = dec.e;
    return out;
  };
  ordered_json doc;
  doc["x"] = cert.x.str();
  doc["y"] = cert.y.str();
  doc["r"] = cert.r.str();
  doc["s"] = cert.s.str();
  doc["dec_r"] = decomposition(cert.dec_r);
  doc["dec_s"] = decomposition(cert.dec_s);
  doc["c"] = cert.c;
  doc["d"] = cert.d;
  doc["c_prime"] = cert.c_prime;
  doc["d_prime"] = cert.d_prime;
  doc["m"] = cert.m;
  doc["n"] = cert.n;
  return doc.dump();
}

}  // namespace wordreg
