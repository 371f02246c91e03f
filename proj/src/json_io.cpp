#include "orthokit/json_io.hpp"

namespace ortho::io {
namespace {

json check_to_json(const Check& c) {
  json j;
  j["name"] = c.name;
  j["pass"] = c.pass;
  j["kind"] = to_string(c.kind);
  if (!c.witness.empty()) j["witness"] = c.witness;
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (!c.exhaustive) j["exhaustive"] = false;
  if (c.advisory) j["advisory"] = true;
  return j;
}

}  // namespace

json to_json(const Report& r, bool with_timing) {
  json j;
  j["subject"] = r.subject;
  j["ok"] = r.ok();
  j["exhaustive"] = r.exhaustive();
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(check_to_json(c));
  j["checks"] = std::move(checks);
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

json to_json(const LatticeData& d) {
  json j;
  j["name"] = d.name;
  j["elements"] = d.labels;
  json leq = json::array();
  for (std::size_t a = 0; a < d.leq.size(); ++a)
    d.leq[a].for_each([&](int b) {
      if (static_cast<int>(a) != b)
        leq.push_back(json::array({d.labels[a], d.labels[static_cast<std::size_t>(b)]}));
    });
  j["leq"] = std::move(leq);
  json ortho = json::array();
  for (std::size_t a = 0; a < d.ortho.size(); ++a)
    ortho.push_back(json::array({d.labels[a], d.labels[static_cast<std::size_t>(d.ortho[a])]}));
  j["ortho"] = std::move(ortho);
  if (d.exists) {
    json ex = json::array();
    for (std::size_t a = 0; a < d.exists->size(); ++a)
      ex.push_back(json::array({d.labels[a], d.labels[static_cast<std::size_t>((*d.exists)[a])]}));
    j["exists"] = std::move(ex);
  }
  return j;
}

json to_json(const FiniteOrthoLattice& L) { return to_json(L.data()); }

json to_json(const OrthoFrame& f) {
  json j;
  j["name"] = f.name;
  j["points"] = f.labels;
  json perp = json::array();
  for (int x = 0; x < f.size(); ++x)
    f.perp[static_cast<std::size_t>(x)].for_each([&](int y) {
      if (x < y)
        perp.push_back(json::array(
            {f.labels[static_cast<std::size_t>(x)], f.labels[static_cast<std::size_t>(y)]}));
    });
  j["perp"] = std::move(perp);
  if (f.rel) {
    json rel = json::array();
    for (int x = 0; x < f.size(); ++x)
      (*f.rel)[static_cast<std::size_t>(x)].for_each([&](int y) {
        rel.push_back(json::array(
            {f.labels[static_cast<std::size_t>(x)], f.labels[static_cast<std::size_t>(y)]}));
      });
    j["rel"] = std::move(rel);
  }
  return j;
}

json to_json(const CompletionWitness& w, const Report& verification, bool with_timing) {
  json j;
  j["kind"] = w.kind == CompletionKind::macneille ? "macneille" : "canonical";
  j["source"] = to_json(w.source);
  j["frame"] = to_json(w.frame);
  json embed;
  for (int a = 0; a < w.source.size(); ++a)
    embed[w.source.label(a)] =
        w.target.lattice.label(w.embed[static_cast<std::size_t>(a)]);
  j["embedding"] = std::move(embed);
  json target;
  target["size"] = w.target.lattice.size();
  target["sets"] = json::array();
  for (const auto& s : w.target.sets) target["sets"].push_back(set_label(s, w.frame.labels));
  j["target"] = std::move(target);
  j["report"] = to_json(verification, with_timing);
  return j;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ortho::io
