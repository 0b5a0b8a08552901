#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rehabkit {

/// Malformed or inconsistent data (bad channel layout, non-finite samples, ...).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem / parse failures distinct from data-level validation.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Cohort { Healthy, PostStroke };
enum class PoseCondition { A, B };
enum class GameAxis { X, Y };

enum class TaskId {
    XAxis,
    YAxis,
    ZAxis,
    Torque,
    CircleCW,
    CircleCCW,
    Spline1,
    Spline2,
};

// Wrench channel indices, fixed across the whole toolkit.
inline constexpr int kFx = 0;
inline constexpr int kFy = 1;
inline constexpr int kFz = 2;
inline constexpr int kTx = 3;
inline constexpr int kTy = 4;
inline constexpr int kTz = 5;

inline std::string to_string(Cohort c) {
    return c == Cohort::Healthy ? "healthy" : "post_stroke";
}

inline Cohort cohort_from_string(std::string_view s) {
    if (s == "healthy") return Cohort::Healthy;
    if (s == "post_stroke") return Cohort::PostStroke;
    throw DataError("unknown cohort: '" + std::string(s) + "'");
}

inline std::string to_string(PoseCondition c) {
    return c == PoseCondition::A ? "A" : "B";
}

inline PoseCondition condition_from_string(std::string_view s) {
    if (s == "A") return PoseCondition::A;
    if (s == "B") return PoseCondition::B;
    throw DataError("unknown pose condition: '" + std::string(s) + "'");
}

inline std::string to_string(TaskId t) {
    switch (t) {
        case TaskId::XAxis: return "x_axis";
        case TaskId::YAxis: return "y_axis";
        case TaskId::ZAxis: return "z_axis";
        case TaskId::Torque: return "torque";
        case TaskId::CircleCW: return "circle_cw";
        case TaskId::CircleCCW: return "circle_ccw";
        case TaskId::Spline1: return "spline_1";
        case TaskId::Spline2: return "spline_2";
    }
    throw std::logic_error("invalid TaskId");
}

inline TaskId task_from_string(std::string_view s) {
    if (s == "x_axis") return TaskId::XAxis;
    if (s == "y_axis") return TaskId::YAxis;
    if (s == "z_axis") return TaskId::ZAxis;
    if (s == "torque") return TaskId::Torque;
    if (s == "circle_cw") return TaskId::CircleCW;
    if (s == "circle_ccw") return TaskId::CircleCCW;
    if (s == "spline_1") return TaskId::Spline1;
    if (s == "spline_2") return TaskId::Spline2;
    throw DataError("unknown task id: '" + std::string(s) + "'");
}

struct ParticipantInfo {
    std::string id;
    Cohort cohort = Cohort::Healthy;
    std::optional<std::string> handedness;
    std::optional<std::string> impaired_side;
};

/// One row of the task table: which wrench channels drive which game axes.
/// input_channels[i] drives output_axes[i].
struct TaskSpec {
    TaskId id = TaskId::XAxis;
    std::vector<int> input_channels;
    std::vector<GameAxis> output_axes;
    int repetitions = 0;
    std::optional<bool> clockwise;  // circles and splines only
};

inline bool is_force_task(TaskId t) { return t != TaskId::Torque; }

inline bool is_single_axis_task(TaskId t) {
    return t == TaskId::XAxis || t == TaskId::YAxis || t == TaskId::ZAxis ||
           t == TaskId::Torque;
}

/// The eight built-in task rows. Closed set: everything downstream accepts
/// only these ids.
inline const std::array<TaskSpec, 8>& builtin_task_table() {
    static const std::array<TaskSpec, 8> table = {{
        {TaskId::XAxis, {kFx}, {GameAxis::X}, 7, std::nullopt},
        {TaskId::YAxis, {kFy}, {GameAxis::Y}, 7, std::nullopt},
        {TaskId::ZAxis, {kFz}, {GameAxis::Y}, 7, std::nullopt},
        {TaskId::Torque, {kTz}, {GameAxis::X}, 5, std::nullopt},
        {TaskId::CircleCW, {kFx, kFy}, {GameAxis::X, GameAxis::Y}, 3, true},
        {TaskId::CircleCCW, {kFx, kFy}, {GameAxis::X, GameAxis::Y}, 3, false},
        {TaskId::Spline1, {kFx, kFy}, {GameAxis::X, GameAxis::Y}, 3, false},
        {TaskId::Spline2, {kFx, kFy}, {GameAxis::X, GameAxis::Y}, 3, true},
    }};
    return table;
}

inline const TaskSpec& task_spec(TaskId id) {
    for (const auto& spec : builtin_task_table()) {
        if (spec.id == id) return spec;
    }
    throw std::logic_error("invalid TaskId");
}

/// Productive wrench channels per Table-row mapping.
inline std::vector<int> productive_channels(const TaskSpec& task) {
    return task.input_channels;
}

/// Force channels the task leaves unspecified. Productive and non-productive
/// sets partition {Fx, Fy, Fz}; only defined for force tasks.
inline std::vector<int> nonproductive_force_channels(const TaskSpec& task) {
    if (!is_force_task(task.id)) {
        throw std::invalid_argument(
            "torque task has no non-productive force decomposition");
    }
    std::vector<int> out;
    for (int ch : {kFx, kFy, kFz}) {
        bool productive = false;
        for (int in : task.input_channels) productive |= (in == ch);
        if (!productive) out.push_back(ch);
    }
    return out;
}

/// Timestamped multichannel samples. rows(values) == t.size(),
/// cols(values) == labels.size(); timestamps strictly increasing, values finite.
struct SampledSeries {
    std::vector<double> t;
    Eigen::MatrixXd values;  // sample rows x channel cols
    std::vector<std::string> labels;

    Eigen::Index samples() const { return static_cast<Eigen::Index>(t.size()); }
    Eigen::Index channels() const { return values.cols(); }

    void validate() const {
        if (t.empty()) throw DataError("series is empty");
        if (values.rows() != samples()) {
            throw DataError("series row count does not match timestamp count");
        }
        if (static_cast<std::size_t>(values.cols()) != labels.size()) {
            throw DataError("series channel count does not match label count");
        }
        for (std::size_t i = 1; i < t.size(); ++i) {
            if (!(t[i] > t[i - 1])) {
                throw DataError("timestamps not strictly increasing at row " +
                                std::to_string(i));
            }
        }
        if (!values.allFinite() ||
            !std::all_of(t.begin(), t.end(),
                         [](double x) { return std::isfinite(x); })) {
            throw DataError("series contains non-finite values");
        }
    }
};

inline const std::array<std::string, 8>& emg_channel_names() {
    static const std::array<std::string, 8> names = {"AD", "MD", "PD", "BB",
                                                     "TR", "BR", "FL", "EX"};
    return names;
}

inline const std::array<std::string, 6>& wrench_channel_names() {
    static const std::array<std::string, 6> names = {"fx", "fy", "fz",
                                                     "tx", "ty", "tz"};
    return names;
}

inline const std::array<std::string, 4>& game_channel_names() {
    static const std::array<std::string, 4> names = {"target_x", "target_y",
                                                     "avatar_x", "avatar_y"};
    return names;
}

namespace detail {

template <std::size_t N>
void require_channels(const SampledSeries& s,
                      const std::array<std::string, N>& names,
                      const char* what) {
    s.validate();
    if (static_cast<std::size_t>(s.channels()) != N) {
        throw DataError(std::string(what) + ": expected " + std::to_string(N) +
                        " channels, got " + std::to_string(s.channels()));
    }
    for (std::size_t i = 0; i < N; ++i) {
        if (s.labels[i] != names[i]) {
            throw DataError(std::string(what) + ": channel " +
                            std::to_string(i) + " is '" + s.labels[i] +
                            "', expected '" + names[i] + "'");
        }
    }
}

}  // namespace detail

/// 8-channel sEMG series: AD, MD, PD, BB, TR, BR, FL, EX in that order.
struct EmgRecord {
    SampledSeries series;

    static EmgRecord from_series(SampledSeries s) {
        detail::require_channels(s, emg_channel_names(), "EMG");
        return EmgRecord{std::move(s)};
    }
};

/// 6-channel wrench: fx, fy, fz [N], tx, ty, tz [N*m].
struct WrenchRecord {
    SampledSeries series;

    static WrenchRecord from_series(SampledSeries s) {
        detail::require_channels(s, wrench_channel_names(), "wrench");
        return WrenchRecord{std::move(s)};
    }
};

/// Target and avatar screen positions: target_x, target_y, avatar_x, avatar_y.
struct GameTrace {
    SampledSeries series;

    static GameTrace from_series(SampledSeries s) {
        detail::require_channels(s, game_channel_names(), "game trace");
        return GameTrace{std::move(s)};
    }

    double start() const { return series.t.front(); }
    double end() const { return series.t.back(); }
    Eigen::VectorXd target(GameAxis a) const {
        return series.values.col(a == GameAxis::X ? 0 : 1);
    }
    Eigen::VectorXd avatar(GameAxis a) const {
        return series.values.col(a == GameAxis::X ? 2 : 3);
    }
};

/// One participant x condition x task recording.
struct Trial {
    ParticipantInfo participant;
    PoseCondition condition = PoseCondition::A;
    TaskSpec task;
    EmgRecord emg;
    WrenchRecord wrench;
    GameTrace game;
    double scaling_factor = 0.0;  // game-units/s per newton, shared dataset-wide

    /// Cross-series invariants: positive scaling factor, every series
    /// overlapping the game window.
    void validate() const {
        if (!(scaling_factor > 0)) {
            throw DataError("scaling factor must be > 0");
        }
        const double lo = game.start();
        const double hi = game.end();
        for (const SampledSeries* s : {&emg.series, &wrench.series}) {
            if (s->t.back() < lo || s->t.front() > hi) {
                throw DataError("series does not overlap the game window");
            }
        }
    }
};

inline std::string trial_key(const std::string& participant, PoseCondition c,
                             TaskId t) {
    return participant + "_" + to_string(c) + "_" + to_string(t);
}

inline std::string trial_key(const Trial& trial) {
    return trial_key(trial.participant.id, trial.condition, trial.task.id);
}

/// Per-sample binary subtask labels aligned to some reference timeline.
struct SubtaskSequence {
    std::vector<double> t;
    std::vector<std::uint8_t> labels;  // 0 or 1

    void validate() const {
        if (t.size() != labels.size()) {
            throw DataError("subtask label count does not match timestamps");
        }
        for (auto v : labels) {
            if (v > 1) throw DataError("subtask labels must be 0 or 1");
        }
    }
};

}  // namespace rehabkit
