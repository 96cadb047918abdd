#include "corrsens/serialize.hpp"

#include <ostream>

#include "corrsens/csv.hpp"

namespace corrsens {

namespace {

Json candidate_json(const CandidateEval& c, bool with_p) {
    Json j;
    j["x"] = c.point.x;
    j["y"] = c.point.y;
    j["label"] = to_string(c.label);
    j["r_aug"] = c.r_aug;
    if (with_p) {
        j["p_aug"] = c.p_aug;
    }
    return j;
}

}  // namespace

Json to_json(const SensitivityReport& rep) {
    Json j;
    j["r"] = rep.r_current;
    if (rep.p_defined) {
        j["p"] = rep.p_current;
    }
    j["delta_r"] = rep.delta_r;
    if (rep.p_defined) {
        j["delta_p"] = rep.delta_p;
    }
    j["straddle"] = rep.straddle;
    {
        Json w;
        w["x"] = rep.witness_r.point.x;
        w["y"] = rep.witness_r.point.y;
        w["label"] = to_string(rep.witness_r.label);
        w["r_aug"] = rep.witness_r.r_aug;
        j["witness_r"] = std::move(w);
    }
    if (rep.p_defined) {
        Json w;
        if (rep.stationary_p_witness) {
            // the maximizer is an interior zero of the augmented PCC; its
            // coordinates are not constructed
            w["label"] = "stationary";
        } else {
            w["x"] = rep.witness_p.point.x;
            w["y"] = rep.witness_p.point.y;
            w["label"] = to_string(rep.witness_p.label);
        }
        w["p_aug"] = rep.stationary_p_witness ? 1.0 : rep.witness_p.p_aug;
        j["witness_p"] = std::move(w);
    }
    if (!rep.p_defined) {
        j["p_defined"] = false;
    }
    Json cands = Json::array();
    for (const auto& c : rep.candidates) {
        cands.push_back(candidate_json(c, rep.p_defined));
    }
    j["candidates"] = std::move(cands);
    return j;
}

Json to_json(const StreamRecord& rec) {
    Json j;
    j["index"] = rec.index;
    j["report_before"] = to_json(rec.report_before);
    j["observed_delta_r"] = rec.observed_delta_r;
    j["within_prediction"] = rec.within_prediction;
    j["point_in_region"] = rec.point_in_region;
    return j;
}

Json to_json(const OracleReport& rep) {
    Json j;
    j["grid_delta_r"] = rep.grid_delta_r;
    j["grid_delta_p"] = rep.grid_delta_p;
    j["grid_witness"] = Json{{"x", rep.grid_witness.x}, {"y", rep.grid_witness.y}};
    j["grid_resolution"] = rep.grid_resolution;
    j["engine_delta_r"] = rep.engine_delta_r;
    j["engine_delta_p"] = rep.engine_delta_p;
    j["agree_within"] = rep.agree_within;
    return j;
}

Json to_json(const BenchReport& rep) {
    Json j;
    j["trials_per_cell"] = rep.trials_per_cell;
    j["grid_resolution"] = rep.grid_resolution;
    j["rel_tol"] = rep.rel_tol;
    j["seed"] = rep.seed;
    Json cells = Json::array();
    for (const auto& c : rep.cells) {
        Json cj;
        cj["kind"] = to_string(c.kind);
        cj["size"] = c.size;
        cj["trials"] = c.trials;
        cj["agree_count"] = c.agree_count;
        cj["agreement_rate"] = c.agreement_rate;
        cj["max_rel_gap"] = c.max_rel_gap;
        cj["resamples"] = c.resamples;
        cells.push_back(std::move(cj));
    }
    j["cells"] = std::move(cells);
    j["total_trials"] = rep.total_trials;
    j["total_agree"] = rep.total_agree;
    j["overall_agreement"] = rep.overall_agreement;
    j["max_rel_gap"] = rep.max_rel_gap;
    j["total_resamples"] = rep.total_resamples;
    return j;
}

void write_csv(std::ostream& out, const SensitivityReport& rep) {
    out << "key,value\n";
    out << "r," << format_double(rep.r_current) << '\n';
    if (rep.p_defined) {
        out << "p," << format_double(rep.p_current) << '\n';
    }
    out << "delta_r," << format_double(rep.delta_r) << '\n';
    if (rep.p_defined) {
        out << "delta_p," << format_double(rep.delta_p) << '\n';
    }
    out << "straddle," << (rep.straddle ? "true" : "false") << '\n';
    out << "witness_r," << format_double(rep.witness_r.point.x) << ' '
        << format_double(rep.witness_r.point.y) << ' '
        << to_string(rep.witness_r.label) << '\n';
    if (rep.p_defined) {
        out << "witness_p,";
        if (rep.stationary_p_witness) {
            out << "stationary";
        } else {
            out << format_double(rep.witness_p.point.x) << ' '
                << format_double(rep.witness_p.point.y) << ' '
                << to_string(rep.witness_p.label);
        }
        out << '\n';
    }
    out << "candidate,x,y,label,r_aug" << (rep.p_defined ? ",p_aug" : "")
        << '\n';
    for (const auto& c : rep.candidates) {
        out << "candidate," << format_double(c.point.x) << ','
            << format_double(c.point.y) << ',' << to_string(c.label) << ','
            << format_double(c.r_aug);
        if (rep.p_defined) {
            out << ',' << format_double(c.p_aug);
        }
        out << '\n';
    }
}

void write_csv(std::ostream& out, const OracleReport& rep) {
    out << "key,value\n";
    out << "grid_delta_r," << format_double(rep.grid_delta_r) << '\n';
    out << "grid_delta_p," << format_double(rep.grid_delta_p) << '\n';
    out << "grid_witness_x," << format_double(rep.grid_witness.x) << '\n';
    out << "grid_witness_y," << format_double(rep.grid_witness.y) << '\n';
    out << "grid_resolution," << rep.grid_resolution << '\n';
    out << "engine_delta_r," << format_double(rep.engine_delta_r) << '\n';
    out << "engine_delta_p," << format_double(rep.engine_delta_p) << '\n';
    out << "agree_within," << format_double(rep.agree_within) << '\n';
}

void write_csv(std::ostream& out, const BenchReport& rep) {
    out << "kind,size,trials,agree_count,agreement_rate,max_rel_gap,resamples\n";
    for (const auto& c : rep.cells) {
        out << to_string(c.kind) << ',' << c.size << ',' << c.trials << ','
            << c.agree_count << ',' << format_double(c.agreement_rate) << ','
            << format_double(c.max_rel_gap) << ',' << c.resamples << '\n';
    }
    out << "overall," << '-' << ',' << rep.total_trials << ','
        << rep.total_agree << ',' << format_double(rep.overall_agreement)
        << ',' << format_double(rep.max_rel_gap) << ','
        << rep.total_resamples << '\n';
}

void write_csv_row(std::ostream& out, const StreamRecord& rec, bool header) {
    if (header) {
        out << "index,r,p,delta_r,delta_p,straddle,observed_delta_r,"
               "within_prediction,point_in_region\n";
    }
    const SensitivityReport& rep = rec.report_before;
    out << rec.index << ',' << format_double(rep.r_current) << ','
        << format_double(rep.p_current) << ',' << format_double(rep.delta_r)
        << ',' << format_double(rep.delta_p) << ','
        << (rep.straddle ? "true" : "false") << ','
        << format_double(rec.observed_delta_r) << ','
        << (rec.within_prediction ? "true" : "false") << ','
        << (rec.point_in_region ? "true" : "false") << '\n';
}

}  // namespace corrsens
