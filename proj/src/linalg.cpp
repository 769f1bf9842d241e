#include "sigbranch/linalg.hpp"

#include <stdexcept>
#include <sstream>

namespace sigbranch {

long rat_to_long(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() != 1) throw std::runtime_error("rat_to_long: not an integer");
    if (!c.get_num().fits_slong_p()) throw std::runtime_error("rat_to_long: out of range");
    return c.get_num().get_si();
}

std::string ivec_to_string(const IVec& v, char sep) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

IVec parse_ivec(const std::string& s) {
    IVec out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',' || ch == ' ') {
            if (!cur.empty()) {
                out.push_back(std::stol(cur));
                cur.clear();
            }
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(std::stol(cur));
    return out;
}

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool QMat::is_zero() const {
    for (const Rat& x : data_)
        if (x != 0) return false;
    return true;
}

QMat QMat::operator*(const QMat& o) const {
    if (cols_ != o.rows_) throw std::logic_error("QMat dims");
    QMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j) == 0) continue;
                r.at(i, j) += v * o.at(k, j);
            }
        }
    return r;
}

QMat QMat::operator+(const QMat& o) const {
    QMat r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

QMat QMat::operator-(const QMat& o) const {
    QMat r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

QMat QMat::scaled(const Rat& c) const {
    QMat r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = c * data_[i];
    return r;
}

QMat QMat::transposed() const {
    QMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

QVec QMat::apply(const QVec& v) const {
    if (int(v.size()) != cols_) throw std::logic_error("QMat::apply dims");
    QVec r(rows_);
    for (int i = 0; i < rows_; ++i) {
        Rat s = 0;
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) s += at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

int rank(QMat m) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, c) == 0) continue;
            Rat f = m.at(i, c) / m.at(r, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

std::optional<QVec> solve(QMat a, QVec b) {
    int n = a.rows(), m = a.cols();
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < m && r < n; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (a.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < m; ++j) std::swap(a.at(piv, j), a.at(r, j));
            std::swap(b[piv], b[r]);
        }
        for (int i = 0; i < n; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rat f = a.at(i, c) / a.at(r, c);
            for (int j = c; j < m; ++j) a.at(i, j) -= f * a.at(r, j);
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < n; ++i)
        if (b[i] != 0) return std::nullopt;
    QVec x(m, Rat(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / a.at(i, pivot_col[i]);
    return x;
}

std::vector<QVec> nullspace(QMat a) {
    int n = a.rows(), m = a.cols();
    std::vector<int> pivot_of_col(m, -1);
    int r = 0;
    for (int c = 0; c < m && r < n; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (a.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m; ++j) std::swap(a.at(piv, j), a.at(r, j));
        Rat d = a.at(r, c);
        for (int j = 0; j < m; ++j) a.at(r, j) /= d;
        for (int i = 0; i < n; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rat f = a.at(i, c);
            for (int j = 0; j < m; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivot_of_col[c] = r;
        ++r;
    }
    std::vector<QVec> basis;
    for (int c = 0; c < m; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        QVec v(m, Rat(0));
        v[c] = 1;
        for (int c2 = 0; c2 < m; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = -a.at(pivot_of_col[c2], c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<IVec> integer_kernel(const std::vector<IVec>& rows) {
    size_t m = rows.size();
    size_t d = m ? rows[0].size() : 0;
    // Work matrix [A | I] with exact big integers; row-reduce A part by
    // Euclidean elimination. Rows whose A part vanishes give kernel vectors.
    std::vector<std::vector<Int>> w(m, std::vector<Int>(d + m, 0));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < d; ++j) w[i][j] = rows[i][j];
        w[i][d + i] = 1;
    }
    size_t r = 0;
    for (size_t c = 0; c < d && r < m; ++c) {
        // Repeatedly reduce column c below row r with Euclid until at most
        // one nonzero remains at the pivot row.
        while (true) {
            size_t piv = m;
            for (size_t i = r; i < m; ++i)
                if (w[i][c] != 0 && (piv == m || abs(w[i][c]) < abs(w[piv][c]))) piv = i;
            if (piv == m) break;
            std::swap(w[piv], w[r]);
            bool again = false;
            for (size_t i = r + 1; i < m; ++i) {
                if (w[i][c] == 0) continue;
                Int q = w[i][c] / w[r][c];  // truncated division is fine here
                if (q != 0)
                    for (size_t j = 0; j < d + m; ++j) w[i][j] -= q * w[r][j];
                if (w[i][c] != 0) again = true;
            }
            if (!again) break;
        }
        if (w[r][c] != 0) ++r;
    }
    std::vector<IVec> kernel;
    for (size_t i = r; i < m; ++i) {
        bool zero = true;
        for (size_t j = 0; j < d; ++j)
            if (w[i][j] != 0) { zero = false; break; }
        if (!zero) continue;
        IVec v(m);
        for (size_t j = 0; j < m; ++j) {
            if (!w[i][d + j].fits_slong_p()) throw std::runtime_error("integer_kernel: entry too large");
            v[j] = w[i][d + j].get_si();
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace sigbranch
