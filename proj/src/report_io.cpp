#include "kummerlab/report_io.hpp"

#include "json.hpp"

namespace kummerlab {

const char* csv_header() { return "model,p,param1,param2,exact,euler,formula,match,skipped"; }

std::string csv_row(const CountReport& r) {
    std::string row(model_tag(r.model));
    row += ',';
    row += std::to_string(r.p);
    row += ',';
    row += std::to_string(r.params[0]);
    row += ',';
    if (r.n_params > 1) row += std::to_string(r.params[1]);
    row += ',';
    row += std::to_string(r.exact);
    row += ',';
    row += std::to_string(r.euler.v);
    row += ',';
    if (r.formula) row += std::to_string(r.formula->v);
    row += ',';
    row += r.match ? "true" : "false";
    row += ',';
    row += std::to_string(r.skipped);
    return row;
}

std::string jsonl_row(const CountReport& r) {
    nlohmann::ordered_json j;
    j["model"] = std::string(model_tag(r.model));
    j["p"] = r.p;
    j["param1"] = r.params[0];
    if (r.n_params > 1)
        j["param2"] = r.params[1];
    else
        j["param2"] = nullptr;
    j["exact"] = r.exact;
    j["euler"] = r.euler.v;
    if (r.formula)
        j["formula"] = r.formula->v;
    else
        j["formula"] = nullptr;
    j["match"] = r.match;
    j["skipped"] = r.skipped;
    return j.dump();
}

void ReportWriter::write(const CountReport& r) {
    if (format_ == ReportFormat::Csv) {
        if (!header_done_) {
            out_ << csv_header() << '\n';
            header_done_ = true;
        }
        out_ << csv_row(r) << '\n';
    } else {
        out_ << jsonl_row(r) << '\n';
    }
}

}  // namespace kummerlab
