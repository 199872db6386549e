#pragma once

// Persistent cache of extremal-number records, stored as a JSON array of
// record objects. Exact records are immutable; bounded records only ever
// tighten. Saves go through a temp file + rename under an advisory flock.

#include "io.hpp"
#include "rksolver.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <filesystem>
#include <map>
#include <tuple>

namespace apfree {

class RkCache {
public:
    explicit RkCache(std::filesystem::path file = {}) : file_(std::move(file)) {
        if (file_.empty() || !std::filesystem::exists(file_)) return;
        Json j = load_json_file(file_.string());
        if (!j.is_array()) throw ParameterError("cache file is not a JSON array: " + file_.string());
        for (const auto& rj : j) {
            RkRecord r = record_from_json(rj);
            records_[key(r.k, r.m, r.N)] = std::move(r);
        }
    }

    const std::filesystem::path& path() const { return file_; }
    std::size_t size() const { return records_.size(); }

    const RkRecord* find(int k, int m, long long N) const {
        auto it = records_.find(key(k, m, N));
        return it == records_.end() ? nullptr : &it->second;
    }

    // Merge a record in: exact beats bounded, bounds only tighten, and a
    // conflicting exact value means one side is corrupt.
    void upgrade(const RkRecord& r) {
        auto it = records_.find(key(r.k, r.m, r.N));
        if (it == records_.end()) {
            records_[key(r.k, r.m, r.N)] = r;
            dirty_ = true;
            return;
        }
        RkRecord& cur = it->second;
        if (cur.status == RkRecord::Status::exact) {
            if (r.status == RkRecord::Status::exact && r.value != cur.value)
                throw ConstructionError("cache conflict: two exact values for the same record");
            return;  // exact is final
        }
        if (r.status == RkRecord::Status::exact) {
            cur = r;
            dirty_ = true;
            return;
        }
        bool changed = false;
        if (r.lower > cur.lower) {
            cur.lower = r.lower;
            cur.witness = r.witness;
            changed = true;
        }
        if (r.upper < cur.upper) {
            cur.upper = r.upper;
            changed = true;
        }
        if (changed) {
            cur.status = RkRecord::Status::bounded;
            dirty_ = true;
        }
    }

    // Cached-exact short-circuit, else solve (using every cached exact value
    // of the same family as a bound table) and record the outcome.
    RkRecord solve(int k, int m, long long N, const SolveBudget& budget = {}) {
        if (const RkRecord* hit = find(k, m, N); hit && hit->status == RkRecord::Status::exact)
            return *hit;
        RkTable table = exact_table(k, m);
        RkRecord rec = solve_exact(k, m, N, budget, &table);
        upgrade(rec);
        return *find(k, m, N);
    }

    // Fill sides 1..N bottom-up so suffix bounds are available at each step.
    void ensure_range(int k, int m, long long N, const SolveBudget& per_side_budget = {}) {
        for (long long n = 1; n <= N; ++n) solve(k, m, n, per_side_budget);
    }

    RkTable exact_table(int k, int m) const {
        RkTable t;
        for (const auto& [kk, rec] : records_) {
            (void)kk;
            if (rec.k == k && rec.m == m && rec.status == RkRecord::Status::exact)
                t[rec.N] = rec.value;
        }
        return t;
    }

    void save() {
        if (file_.empty() || !dirty_) return;
        Json arr = Json::array();
        for (const auto& [kk, rec] : records_) {
            (void)kk;
            arr.push_back(to_json(rec));
        }
        std::filesystem::path tmp = file_;
        tmp += ".tmp";
        int fd = ::open(file_.c_str(), O_CREAT | O_RDWR, 0644);
        if (fd >= 0) ::flock(fd, LOCK_EX);
        save_json_file(tmp.string(), arr);
        std::filesystem::rename(tmp, file_);
        if (fd >= 0) {
            ::flock(fd, LOCK_UN);
            ::close(fd);
        }
        dirty_ = false;
    }

private:
    using Key = std::tuple<int, int, long long>;
    static Key key(int k, int m, long long N) { return {k, m, N}; }

    std::filesystem::path file_;
    std::map<Key, RkRecord> records_;
    bool dirty_ = false;
};

}  // namespace apfree
