#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "affx/dataset.hpp"
#include "affx/emotion.hpp"
#include "affx/experiment.hpp"
#include "affx/metrics.hpp"
#include "affx/rng.hpp"

namespace py = pybind11;
using namespace affx;

namespace {

std::vector<int> adulterated_labels(const std::vector<int>& true_labels,
                                    std::uint64_t seed) {
    auto instances = std::make_shared<std::vector<ImageInstance>>();
    instances->reserve(true_labels.size());
    for (std::size_t i = 0; i < true_labels.size(); ++i) {
        if (true_labels[i] < 0 || true_labels[i] > 9)
            throw std::invalid_argument("labels must be digits 0..9");
        ImageInstance inst;
        inst.id = static_cast<std::uint32_t>(i);
        inst.true_label = static_cast<std::uint8_t>(true_labels[i]);
        instances->push_back(inst);
    }
    const LabeledPool base{
        std::shared_ptr<const std::vector<ImageInstance>>(instances)};
    const LabeledPool adulterated = adulterate(base, seed);
    std::vector<int> out(adulterated.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = adulterated.assigned_label(i);
    return out;
}

py::list run_synthetic(std::size_t agents, std::size_t episodes,
                       std::uint64_t master_seed, const std::string& emotion,
                       double correct_prob, std::size_t jobs) {
    ExperimentConfig config;
    config.num_agents = agents;
    config.episodes = episodes;
    config.master_seed = master_seed;
    config.emotion_kind = emotion_from_name(emotion);
    config.task_mode = TaskMode::synthetic_oracle;
    config.synthetic.correct_prob = correct_prob;

    const std::vector<AgentRecord> records = run_population(config, TaskContext{}, jobs);
    py::list out;
    for (const AgentRecord& r : records) {
        py::dict d;
        d["agent_id"] = r.agent_id;
        d["failed"] = r.failed;
        d["c1"] = r.personality.c1;
        d["c2_degrees"] = r.personality.c2_degrees;
        d["episode_cumulative"] = r.episode_cumulative;
        if (!r.failed) {
            d["final_rho"] = episode_spearman(r).back().rho;
            d["behavior"] = behavior_sweep(r.final_actor);
        }
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_affx, m) {
    m.doc() = "emotion-mediated exploration laboratory core";

    py::class_<Rng>(m, "Rng")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("uniform", py::overload_cast<>(&Rng::uniform))
        .def("uniform", py::overload_cast<double, double>(&Rng::uniform),
             py::arg("lo"), py::arg("hi"))
        .def("normal", &Rng::normal, py::arg("mu"), py::arg("sigma"))
        .def("index", &Rng::index, py::arg("n"));

    py::class_<AgentPersonality>(m, "Personality")
        .def(py::init<>())
        .def_readwrite("c1", &AgentPersonality::c1)
        .def_readwrite("c2_degrees", &AgentPersonality::c2_degrees)
        .def_readwrite("noise_mu", &AgentPersonality::noise_mu)
        .def_readwrite("noise_sigma", &AgentPersonality::noise_sigma)
        .def_readwrite("rng_seed", &AgentPersonality::rng_seed);

    m.def("sample_personality", &sample_personality, py::arg("rng"));
    m.def("sample_confidence", &sample_confidence, py::arg("rng"));
    m.def("pride", &pride, py::arg("accuracy"), py::arg("personality"), py::arg("rng"));
    m.def("surprise", &surprise, py::arg("confidence"), py::arg("accuracy"),
          py::arg("personality"), py::arg("rng"));

    m.def(
        "spearman",
        [](const std::vector<double>& xs, const std::vector<double>& ys) {
            const SpearmanResult r = spearman(xs, ys);
            return py::make_tuple(r.rho, r.constant_input);
        },
        py::arg("xs"), py::arg("ys"),
        "Spearman rank correlation; returns (rho, constant_input_flag)");
    m.def("sliding_window", &sliding_window, py::arg("series"), py::arg("w") = 40);

    py::class_<ImageInstance>(m, "ImageInstance")
        .def_readonly("id", &ImageInstance::id)
        .def_readonly("true_label", &ImageInstance::true_label)
        .def("pixels", &ImageInstance::pixels);

    m.def(
        "load_idx",
        [](const std::string& images_path, const std::string& labels_path) {
            return load_idx(images_path, labels_path);
        },
        py::arg("images_path"), py::arg("labels_path"));

    m.def("adulterated_labels", &adulterated_labels, py::arg("true_labels"),
          py::arg("seed"),
          "Reassigns exactly half the labels to uniformly random wrong digits");

    m.def("behavior_grid", &behavior_grid);
    m.def("run_synthetic", &run_synthetic, py::arg("agents") = 2,
          py::arg("episodes") = 10, py::arg("master_seed") = 7,
          py::arg("emotion") = "surprise", py::arg("correct_prob") = 0.5,
          py::arg("jobs") = 1,
          "Runs a synthetic-oracle population and returns per-agent summaries");
}
