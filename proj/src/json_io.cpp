#include "kpareto/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kpareto {

using nlohmann::json;

namespace {

json rational_json(const Rational& value) {
  return fraction_string(value);
}

Rational rational_from_json(const json& j, const char* what) {
  if (!j.is_string()) {
    throw std::invalid_argument(std::string(what) + " must be a \"num/den\" string");
  }
  return parse_rational(j.get<std::string>());
}

std::string choice_to_bitstring(const Choice& choice) {
  std::string bits(choice.size(), '0');
  for (std::size_t i = 0; i < choice.size(); ++i) {
    if (choice[i]) {
      bits[i] = '1';
    }
  }
  return bits;
}

Choice bitstring_to_choice(const std::string& bits, std::size_t expected_length) {
  if (bits.size() != expected_length) {
    throw std::invalid_argument("choice bitstring length does not match group object count");
  }
  Choice choice(bits.size(), 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      choice[i] = 1;
    } else if (bits[i] != '0') {
      throw std::invalid_argument("choice bitstring must contain only '0' and '1'");
    }
  }
  return choice;
}

}  // namespace

json instance_to_json(const KnapsackInstance& instance) {
  json groups = json::array();
  for (const Group& group : instance.groups) {
    json objects = json::array();
    for (const KnapsackObject& object : group.objects) {
      json box = json::array();
      for (const ProfitBox::Interval& interval : object.box.intervals) {
        box.push_back(json::array({rational_json(interval.lo), rational_json(interval.hi)}));
      }
      json obj{{"weight", rational_json(object.weight)}, {"box", box}};
      if (object.profits) {
        obj["profits"] = *object.profits;
      } else {
        obj["profits"] = nullptr;
      }
      objects.push_back(std::move(obj));
    }
    json choices = json::array();
    for (const Choice& choice : group.choices) {
      choices.push_back(choice_to_bitstring(choice));
    }
    groups.push_back(json{{"objects", std::move(objects)}, {"choices", std::move(choices)}});
  }
  return json{{"d", instance.d}, {"phi", rational_json(instance.phi)},
              {"groups", std::move(groups)}};
}

KnapsackInstance instance_from_json(const json& j) {
  KnapsackInstance instance;
  instance.d = j.at("d").get<int>();
  instance.phi = rational_from_json(j.at("phi"), "phi");
  for (const json& jg : j.at("groups")) {
    Group group;
    for (const json& jo : jg.at("objects")) {
      KnapsackObject object;
      object.weight = rational_from_json(jo.at("weight"), "weight");
      for (const json& ji : jo.at("box")) {
        if (!ji.is_array() || ji.size() != 2) {
          throw std::invalid_argument("box interval must be a [\"lo\", \"hi\"] pair");
        }
        object.box.intervals.push_back(ProfitBox::Interval{
            rational_from_json(ji[0], "box lo"), rational_from_json(ji[1], "box hi")});
      }
      const json& jp = jo.at("profits");
      if (!jp.is_null()) {
        object.profits = jp.get<std::vector<double>>();
      }
      group.objects.push_back(std::move(object));
    }
    for (const json& jc : jg.at("choices")) {
      group.choices.push_back(
          bitstring_to_choice(jc.get<std::string>(), group.objects.size()));
    }
    instance.groups.push_back(std::move(group));
  }
  instance.validate();
  return instance;
}

json plan_to_json(const ConstructionPlan& plan) {
  json m = json::array();
  for (const Rational& mi : plan.m) {
    m.push_back(rational_json(mi));
  }
  return json{{"kind", family_name(plan.kind)},
              {"n", plan.n},
              {"d", plan.d},
              {"phi_input", rational_json(plan.phi_input)},
              {"regime", regime_name(plan.regime)},
              {"phi_eff", rational_json(plan.phi_eff)},
              {"n_p", plan.n_p},
              {"n_q", plan.n_q},
              {"n_hat_p", plan.n_hat_p},
              {"n_hat_q", plan.n_hat_q},
              {"d_hat", plan.d_hat},
              {"m", std::move(m)},
              {"k", plan.k},
              {"N", plan.objects_built}};
}

ConstructionPlan plan_from_json(const json& j) {
  ConstructionPlan plan;
  plan.kind = parse_family(j.at("kind").get<std::string>());
  plan.n = j.at("n").get<std::int64_t>();
  plan.d = j.at("d").get<int>();
  plan.phi_input = rational_from_json(j.at("phi_input"), "phi_input");
  plan.regime = parse_regime(j.at("regime").get<std::string>());
  plan.phi_eff = rational_from_json(j.at("phi_eff"), "phi_eff");
  plan.n_p = j.at("n_p").get<std::int64_t>();
  plan.n_q = j.at("n_q").get<std::int64_t>();
  plan.n_hat_p = j.at("n_hat_p").get<double>();
  plan.n_hat_q = j.at("n_hat_q").get<double>();
  plan.d_hat = j.at("d_hat").get<int>();
  for (const json& jm : j.at("m")) {
    plan.m.push_back(rational_from_json(jm, "m_i"));
  }
  plan.k = j.at("k").get<std::vector<std::int64_t>>();
  plan.objects_built = j.at("N").get<std::int64_t>();
  return plan;
}

json solution_to_json(const KnapsackInstance& instance, const Solution& s,
                      const ObjectiveVector& value) {
  json picks = json::array();
  for (std::size_t g = 0; g < s.pick.size(); ++g) {
    picks.push_back(choice_to_bitstring(instance.groups[g].choices[s.pick[g]]));
  }
  return json{{"solution", std::move(picks)},
              {"weight", rational_json(value.weight)},
              {"profits", value.profits}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open for reading: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path);
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

}  // namespace kpareto
