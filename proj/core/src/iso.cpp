#include "curled2/iso.hpp"

#include <atomic>
#include <future>
#include <mutex>
#include <thread>

namespace curled2 {

Mat4 tilde(const Transform2& X) {
  const FieldElem &a = X.x(), &b = X.y(), &c = X.z(), &d = X.w();
  return Mat4{a * a, b * b, a * b, a * b,   // row of Phi(e)^2
              c * c, d * d, c * d, c * d,   // row of Phi(f)^2
              a * c, b * d, a * d, b * c,   // row of Phi(e)Phi(f)
              a * c, b * d, b * c, a * d};  // row of Phi(f)Phi(e)
}

FieldElem det4(const Mat4& m) {
  // Laplace expansion along the first row via 2x2 minors of rows 2..3.
  const FieldSpec& spec = m[0].spec();
  auto minor2 = [&](std::size_t c0, std::size_t c1) {
    return m[8 + c0] * m[12 + c1] - m[8 + c1] * m[12 + c0];
  };
  FieldElem acc = FieldElem::zero(spec);
  constexpr int sign[4] = {1, -1, 1, -1};
  for (std::size_t col = 0; col < 4; ++col) {
    // 3x3 minor of rows 1..3 with column col removed.
    std::size_t cols[3];
    std::size_t n = 0;
    for (std::size_t c = 0; c < 4; ++c)
      if (c != col) cols[n++] = c;
    FieldElem m3 = m[4 + cols[0]] * minor2(cols[1], cols[2]) -
                   m[4 + cols[1]] * minor2(cols[0], cols[2]) +
                   m[4 + cols[2]] * minor2(cols[0], cols[1]);
    FieldElem contrib = m[col] * m3;
    acc = sign[col] > 0 ? acc + contrib : acc - contrib;
  }
  return acc;
}

Mat4 mat4_mul(const Mat4& lhs, const Mat4& rhs) {
  const FieldSpec& spec = lhs[0].spec();
  Mat4 out = {FieldElem::zero(spec), FieldElem::zero(spec),
              FieldElem::zero(spec), FieldElem::zero(spec),
              FieldElem::zero(spec), FieldElem::zero(spec),
              FieldElem::zero(spec), FieldElem::zero(spec),
              FieldElem::zero(spec), FieldElem::zero(spec),
              FieldElem::zero(spec), FieldElem::zero(spec),
              FieldElem::zero(spec), FieldElem::zero(spec),
              FieldElem::zero(spec), FieldElem::zero(spec)};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t j = 0; j < 4; ++j)
        out[4 * i + j] =
            out[4 * i + j] + lhs[4 * i + k] * rhs[4 * k + j];
  return out;
}

StructureMatrix transform(const StructureMatrix& A, const Transform2& X) {
  if (!(A.spec() == X.spec()))
    throw DomainError("transform: mixed field specs");
  // tilde(X)^-1 = tilde(X^-1), so the lift of the inverse is used directly.
  Mat4 lift_inv = tilde(X.inverse());
  // rows of A * X
  std::array<FieldElem, 8> ax = {
      A.entry(0, 0) * X.x() + A.entry(0, 1) * X.z(),
      A.entry(0, 0) * X.y() + A.entry(0, 1) * X.w(),
      A.entry(1, 0) * X.x() + A.entry(1, 1) * X.z(),
      A.entry(1, 0) * X.y() + A.entry(1, 1) * X.w(),
      A.entry(2, 0) * X.x() + A.entry(2, 1) * X.z(),
      A.entry(2, 0) * X.y() + A.entry(2, 1) * X.w(),
      A.entry(3, 0) * X.x() + A.entry(3, 1) * X.z(),
      A.entry(3, 0) * X.y() + A.entry(3, 1) * X.w()};
  std::array<FieldElem, 8> out = {
      FieldElem::zero(A.spec()), FieldElem::zero(A.spec()),
      FieldElem::zero(A.spec()), FieldElem::zero(A.spec()),
      FieldElem::zero(A.spec()), FieldElem::zero(A.spec()),
      FieldElem::zero(A.spec()), FieldElem::zero(A.spec())};
  for (std::size_t row = 0; row < 4; ++row)
    for (std::size_t k = 0; k < 4; ++k) {
      const FieldElem& factor = lift_inv[4 * row + k];
      out[2 * row] = out[2 * row] + factor * ax[2 * k];
      out[2 * row + 1] = out[2 * row + 1] + factor * ax[2 * k + 1];
    }
  return StructureMatrix(A.spec(), std::move(out));
}

bool is_equiv_under(const StructureMatrix& A, const StructureMatrix& A_prime,
                    const Transform2& X) {
  if (!(A.spec() == A_prime.spec()) || !(A.spec() == X.spec()))
    throw DomainError("is_equiv_under: mixed field specs");
  Mat4 lift = tilde(X);
  for (std::size_t row = 0; row < 4; ++row)
    for (std::size_t col = 0; col < 2; ++col) {
      FieldElem lhs = FieldElem::zero(A.spec());
      for (std::size_t k = 0; k < 4; ++k)
        lhs = lhs + lift[4 * row + k] * A_prime.entry(k, col);
      FieldElem rhs = A.entry(row, 0) * (col == 0 ? X.x() : X.y()) +
                      A.entry(row, 1) * (col == 0 ? X.z() : X.w());
      if (lhs != rhs) return false;
    }
  return true;
}

std::vector<Transform2> gl2_elements(const FieldSpec& spec) {
  if (!spec.finite())
    throw DomainError("GL2 enumeration requires a finite field");
  std::vector<FieldElem> elems = elements(spec);
  std::vector<Transform2> out;
  std::size_t q = elems.size();
  out.reserve(q * q * q * q);
  for (const FieldElem& x : elems)
    for (const FieldElem& y : elems)
      for (const FieldElem& z : elems)
        for (const FieldElem& w : elems) {
          if ((x * w - y * z).is_zero()) continue;
          out.push_back(Transform2(x, y, z, w));
        }
  return out;
}

std::optional<Transform2> find_isomorphism_in(
    std::span<const Transform2> candidates, const StructureMatrix& A,
    const StructureMatrix& A_prime) {
  if (rank(A) != rank(A_prime)) return std::nullopt;
  for (const Transform2& X : candidates)
    if (is_equiv_under(A, A_prime, X)) return X;
  return std::nullopt;
}

namespace {

std::optional<Transform2> parallel_scan(const std::vector<Transform2>& gl2,
                                        const StructureMatrix& A,
                                        const StructureMatrix& A_prime) {
  unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                        4u);
  if (workers < 2 || gl2.size() < 64)
    return find_isomorphism_in(gl2, A, A_prime);

  std::atomic<bool> found{false};
  std::mutex result_mutex;
  std::optional<Transform2> result;
  std::size_t chunk = (gl2.size() + workers - 1) / workers;
  std::vector<std::future<void>> futures;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(gl2.size(), begin + chunk);
    if (begin >= end) break;
    futures.push_back(std::async(std::launch::async, [&, begin, end] {
      for (std::size_t i = begin; i < end; ++i) {
        if (found.load(std::memory_order_relaxed)) return;
        if (is_equiv_under(A, A_prime, gl2[i])) {
          std::lock_guard<std::mutex> lock(result_mutex);
          if (!result) result = gl2[i];
          found.store(true, std::memory_order_relaxed);
          return;
        }
      }
    }));
  }
  for (auto& f : futures) f.get();
  return result;
}

}  // namespace

std::optional<Transform2> find_isomorphism(const StructureMatrix& A,
                                           const StructureMatrix& A_prime,
                                           WitnessSearch mode) {
  if (!(A.spec() == A_prime.spec()))
    throw DomainError("find_isomorphism: mixed field specs");
  if (!A.spec().finite())
    throw UnsupportedFieldError(
        "find_isomorphism searches GL2 of a finite field; over Q use the "
        "constructive classifier");
  if (rank(A) != rank(A_prime)) return std::nullopt;
  std::vector<Transform2> gl2 = gl2_elements(A.spec());
  if (mode == WitnessSearch::parallel) {
    std::optional<Transform2> witness = parallel_scan(gl2, A, A_prime);
    // any returned witness must satisfy the defining equation
    if (witness && !is_equiv_under(A, A_prime, *witness))
      throw Error("internal: parallel scan produced an invalid witness");
    return witness;
  }
  return find_isomorphism_in(gl2, A, A_prime);
}

int rank(const StructureMatrix& A) {
  // exact elimination on the 4x2 matrix
  std::array<std::array<FieldElem, 2>, 4> rows = {{
      {A.entry(0, 0), A.entry(0, 1)},
      {A.entry(1, 0), A.entry(1, 1)},
      {A.entry(2, 0), A.entry(2, 1)},
      {A.entry(3, 0), A.entry(3, 1)},
  }};
  int r = 0;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < 2 && pivot_row < 4; ++col) {
    std::size_t found = pivot_row;
    while (found < 4 && rows[found][col].is_zero()) ++found;
    if (found == 4) continue;
    std::swap(rows[pivot_row], rows[found]);
    for (std::size_t i = pivot_row + 1; i < 4; ++i) {
      if (rows[i][col].is_zero()) continue;
      FieldElem factor = rows[i][col] / rows[pivot_row][col];
      for (std::size_t c = col; c < 2; ++c)
        rows[i][c] = rows[i][c] - factor * rows[pivot_row][c];
    }
    ++pivot_row;
    ++r;
  }
  return r;
}

}  // namespace curled2
