#include "onelight/discharging.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <tuple>

namespace onelight {

const char* to_string(Rule r) {
  switch (r) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::R4: return "R4";
    case Rule::R5: return "R5";
    case Rule::R6_1: return "R6.1";
    case Rule::R6_2: return "R6.2";
    case Rule::R6_3: return "R6.3";
    case Rule::R6_4: return "R6.4";
    case Rule::R7: return "R7";
    case Rule::R8: return "R8";
  }
  return "?";
}

std::optional<Rule> parse_rule(std::string_view text) {
  for (int i = 0; i <= static_cast<int>(Rule::R8); ++i) {
    const auto r = static_cast<Rule>(i);
    if (text == to_string(r)) return r;
  }
  return std::nullopt;
}

bool is_crossing_rule(Rule r) {
  return r == Rule::R6_1 || r == Rule::R6_2 || r == Rule::R6_3 || r == Rule::R6_4;
}

std::string to_string(Element e) { return (e.is_vertex() ? "v" : "f") + std::to_string(e.id); }

std::optional<Element> parse_element(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'v' && text[0] != 'f')) return std::nullopt;
  int id = 0;
  const char* first = text.data() + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, id);
  if (ec != std::errc{} || ptr != last || id < 0) return std::nullopt;
  return text[0] == 'v' ? Element::vertex(id) : Element::face(id);
}

std::vector<Element> ChargeState::elements() const {
  std::vector<Element> out;
  out.reserve(vertex_.size() + face_.size());
  for (std::size_t v = 0; v < vertex_.size(); ++v) out.push_back(Element::vertex(static_cast<int>(v)));
  for (std::size_t f = 0; f < face_.size(); ++f) out.push_back(Element::face(static_cast<int>(f)));
  return out;
}

Charge ChargeState::total() const {
  Charge sum = 0;
  for (const auto& c : vertex_) sum += c;
  for (const auto& c : face_) sum += c;
  return sum;
}

ChargeState initial_charges(const AssociatedPlaneGraph& g) {
  ChargeState state(g.num_vertices(), g.num_faces());
  for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v)
    state[Element::vertex(v)] = g.degree(v) - 4;
  for (FaceId f = 0; f < static_cast<FaceId>(g.num_faces()); ++f)
    state[Element::face(f)] = g.face_degree(f) - 4;
  return state;
}

int special_threshold(int k) {
  switch (k) {
    case 4: return 11;
    case 5: return 9;
    case 6: return 8;
    default: return -1;
  }
}

namespace {

// Far end, at crossing v, of the edge arriving from `near`.
VertexId opposite(const PlaneEmbedding& e, VertexId v, VertexId near) {
  return e.neighbor(v, *e.position(v, near) + 2);
}

}  // namespace

std::vector<SpecialFace> find_special_faces(const AssociatedPlaneGraph& g, const OriginalGraphView& original) {
  const PlaneEmbedding& e = g.embedding();
  std::vector<SpecialFace> out;
  for (FaceId f = 0; f < static_cast<FaceId>(g.num_faces()); ++f) {
    if (e.face_degree(f) != 3) continue;
    const auto walk = e.face_vertices(f);
    for (int p = 0; p < 3; ++p) {
      const VertexId v = walk[p];
      const VertexId a = walk[(p + 1) % 3], b = walk[(p + 2) % 3];
      if (!g.is_false(v) || g.degree(v) != 4 || g.is_false(a) || g.is_false(b)) continue;
      for (auto [pivot, partner] : {std::pair{a, b}, std::pair{b, a}}) {
        const int k = g.degree(pivot);
        if (k < 4 || k > 6) continue;
        const VertexId far_pivot = opposite(e, v, pivot);
        const VertexId far_partner = opposite(e, v, partner);
        if (original.has_edge(partner, far_pivot) && g.degree(far_partner) <= special_threshold(k))
          out.push_back({f, v, pivot, k, partner, {far_pivot, far_partner}});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SpecialFace& x, const SpecialFace& y) {
    return std::tie(x.face, x.pivot) < std::tie(y.face, y.pivot);
  });
  return out;
}

std::vector<TransitiveCorner> transitive_corners(const AssociatedPlaneGraph& g) {
  const PlaneEmbedding& e = g.embedding();
  std::vector<TransitiveCorner> out;
  for (VertexId v : g.false_vertices()) {
    for (int s = 0; s < e.degree(v); ++s) {
      const VertexId before = e.neighbor(v, s), after = e.neighbor(v, s + 1);
      if (g.degree(before) >= 9 && g.degree(after) >= 9)
        out.push_back({e.corner_face(v, s), v, s, before, after});
    }
  }
  std::sort(out.begin(), out.end(), [](const TransitiveCorner& x, const TransitiveCorner& y) {
    return std::tie(x.face, x.crossing, x.slot) < std::tie(y.face, y.crossing, y.slot);
  });
  return out;
}

std::map<FaceId, std::vector<VertexId>> find_transitive_false_vertices(const AssociatedPlaneGraph& g) {
  std::map<FaceId, std::vector<VertexId>> out;
  for (const auto& c : transitive_corners(g)) out[c.face].push_back(c.crossing);
  return out;
}

namespace {

class Engine {
 public:
  Engine(const AssociatedPlaneGraph& g, const OriginalGraphView& original)
      : g_(g), e_(g.embedding()) {
    for (const auto& s : find_special_faces(g, original)) special_.emplace(s.face, s.pivot);
  }

  std::vector<Transfer> run(const ChargeState& initial) {
    vertex_rules();
    crossing_rules();
    ChargeState after = initial;
    apply(after, ledger_);
    residual_rules(after);
    return std::move(ledger_);
  }

 private:
  void send(Rule rule, Element from, Element to, Charge amount) {
    ledger_.push_back({rule, from, to, std::move(amount), std::nullopt, -1, false});
  }
  void send_via(Rule rule, FaceId from, Element to, const Charge& amount, VertexId via, int slot) {
    ledger_.push_back({rule, Element::face(from), to, amount, via, slot, false});
  }

  bool special_at(FaceId f, VertexId pivot) const { return special_.contains({f, pivot}); }

  void vertex_rules() {
    for (VertexId v = 0; v < static_cast<VertexId>(g_.num_vertices()); ++v) {
      if (g_.is_false(v)) continue;
      const int d = g_.degree(v);
      const Element src = Element::vertex(v);
      for (int i = 0; i < d; ++i) {
        const FaceId f = e_.corner_face(v, i);
        const Element dst = Element::face(f);
        const bool triangle = e_.face_degree(f) == 3;
        switch (d) {
          case 4:
            if (special_at(f, v)) send(Rule::R1, src, dst, ratio(1, 6));
            break;
          case 5:
            if (special_at(f, v))
              send(Rule::R2, src, dst, ratio(3, 10));
            else if (triangle)
              send(Rule::R2, src, dst, ratio(1, 5));
            break;
          case 6:
            if (special_at(f, v))
              send(Rule::R3, src, dst, ratio(7, 18));
            else if (triangle)
              send(Rule::R3, src, dst, ratio(1, 3));
            break;
          case 7:
            if (triangle && g_.is_false_face(f)) send(Rule::R4, src, dst, ratio(1, 2));
            break;
          default:
            if (d >= 8) send(Rule::R5, src, dst, ratio(d - 4, d));
            break;
        }
      }
    }
  }

  // Each corner of a crossing is one potential sender. Both labelings of the
  // corner are covered at once; a matching pattern fires a single transfer
  // set.
  void crossing_rules() {
    for (VertexId v : g_.false_vertices()) {
      if (g_.degree(v) != 4) continue;
      for (int s = 0; s < 4; ++s) {
        const FaceId sender = e_.corner_face(v, s);
        const VertexId a = e_.neighbor(v, s), b = e_.neighbor(v, s + 1);
        const VertexId far_a = e_.neighbor(v, s + 2), far_b = e_.neighbor(v, s + 3);
        // Faces next to the sender around v, on the side of far_a / far_b.
        const FaceId toward_a = e_.corner_face(v, s + 1);
        const FaceId toward_b = e_.corner_face(v, s + 3);
        const int near = std::min(g_.degree(a), g_.degree(b));
        const int da = g_.degree(far_a), db = g_.degree(far_b);
        auto emit = [&](Rule r, Element to, const Charge& amount) { send_via(r, sender, to, amount, v, s); };

        if (near >= 24) {
          if (da == 3 && db == 3) {
            const Charge sixth = ratio(1, 6);
            emit(Rule::R6_1, Element::face(toward_a), sixth);
            emit(Rule::R6_1, Element::face(toward_b), sixth);
            emit(Rule::R6_1, Element::vertex(far_a), sixth);
            emit(Rule::R6_1, Element::vertex(far_b), sixth);
          } else if (da == 3 && db >= 4) {
            emit(Rule::R6_1, Element::face(toward_a), ratio(1, 3));
            emit(Rule::R6_1, Element::vertex(far_a), ratio(1, 3));
          } else if (db == 3 && da >= 4) {
            emit(Rule::R6_1, Element::face(toward_b), ratio(1, 3));
            emit(Rule::R6_1, Element::vertex(far_b), ratio(1, 3));
          }
          continue;
        }

        Rule rule;
        Charge half, large_face;
        if (near >= 12) {
          rule = Rule::R6_2;
          half = ratio(1, 6);
          large_face = ratio(1, 3);
        } else if (near >= 10) {
          rule = Rule::R6_3;
          half = ratio(1, 10);
          large_face = ratio(3, 10);
        } else if (near == 9) {
          rule = Rule::R6_4;
          half = ratio(1, 18);
          large_face = ratio(5, 18);
        } else {
          continue;
        }
        const bool small_a = da <= 6, small_b = db <= 6;
        if (!small_a && !small_b) continue;
        if (e_.face_degree(sender) == 3) {
          if (small_a && small_b) {
            emit(rule, Element::face(toward_a), half);
            emit(rule, Element::face(toward_b), half);
          } else {
            emit(rule, Element::face(small_a ? toward_a : toward_b), Charge(2 * half));
          }
        } else {
          emit(rule, Element::face(toward_a), large_face);
          emit(rule, Element::face(toward_b), large_face);
        }
      }
    }
  }

  void split(Rule rule, FaceId f, const Charge& remaining, const std::vector<VertexId>& recipients) {
    if (recipients.empty() || remaining == 0) return;
    const Charge share = remaining / static_cast<long>(recipients.size());
    for (VertexId v : recipients)
      ledger_.push_back({rule, Element::face(f), Element::vertex(v), share, std::nullopt, -1, true});
  }

  void residual_rules(const ChargeState& after) {
    for (FaceId f = 0; f < static_cast<FaceId>(g_.num_faces()); ++f) {
      const auto walk = e_.face_vertices(f);
      const Charge& held = after[Element::face(f)];
      std::vector<VertexId> recipients;
      if (e_.face_degree(f) <= 4) {
        for (VertexId v : walk)
          if (g_.is_true(v) && g_.degree(v) <= 4) recipients.push_back(v);
        split(Rule::R7, f, held, recipients);
      } else {
        Charge remaining = held;
        for (VertexId v : walk) {
          if (g_.is_true(v) && g_.degree(v) == 3) {
            send(Rule::R8, Element::face(f), Element::vertex(v), ratio(2, 3));
            remaining -= ratio(2, 3);
          }
        }
        for (VertexId v : walk)
          if (g_.is_true(v) && g_.degree(v) == 4) recipients.push_back(v);
        split(Rule::R8, f, remaining, recipients);
      }
    }
  }

  static void apply(ChargeState& state, const std::vector<Transfer>& ledger) {
    for (const auto& t : ledger) {
      state[t.source] -= t.amount;
      state[t.target] += t.amount;
    }
  }

 public:
  static ChargeState settle(ChargeState state, const std::vector<Transfer>& ledger) {
    apply(state, ledger);
    return state;
  }

 private:
  const AssociatedPlaneGraph& g_;
  const PlaneEmbedding& e_;
  std::set<std::pair<FaceId, VertexId>> special_;
  std::vector<Transfer> ledger_;
};

}  // namespace

void sort_ledger(std::vector<Transfer>& ledger) {
  std::stable_sort(ledger.begin(), ledger.end(), [](const Transfer& x, const Transfer& y) {
    if (auto c = std::tie(x.rule, x.source, x.target, x.via) <=> std::tie(y.rule, y.source, y.target, y.via); c != 0)
      return c < 0;
    return x.amount < y.amount;
  });
}

DischargeResult apply_discharging(const AssociatedPlaneGraph& g, const OriginalGraphView& original) {
  DischargeResult result;
  result.initial = initial_charges(g);
  Engine engine(g, original);
  result.ledger = engine.run(result.initial);
  result.final = Engine::settle(result.initial, result.ledger);
  sort_ledger(result.ledger);
  return result;
}

DischargeResult apply_discharging(const AssociatedPlaneGraph& g) {
  return apply_discharging(g, recover_original(g));
}

}  // namespace onelight
