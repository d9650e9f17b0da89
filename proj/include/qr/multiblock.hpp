// Multi-block chains: a block's branch set is compressed to at most four
// Kraus operators through its Choi matrix, then m blocks are composed
// sequentially.  Compression keeps the composition cost linear in m.
#pragma once

#include <vector>

#include "qr/fidelity.hpp"
#include "qr/single_path.hpp"

namespace qr {

// Compress an arbitrary Kraus family acting on one qubit to its minimal
// (rank <= 4) representation via the eigendecomposition of the Choi matrix
// C = sum_i vec(K_i) vec(K_i)^dag with row-major vec.
inline std::vector<Mat2> choi_compress(const std::vector<Mat2>& kraus) {
  Eigen::Matrix4cd C = Eigen::Matrix4cd::Zero();
  for (const auto& K : kraus) {
    Eigen::Vector4cd v;
    v << K(0, 0), K(0, 1), K(1, 0), K(1, 1);
    C += v * v.adjoint();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(C);
  std::vector<Mat2> out;
  for (int i = 0; i < 4; ++i) {
    const double w = es.eigenvalues()(i);
    if (w <= 1e-14) continue;
    const Eigen::Vector4cd v = std::sqrt(w) * es.eigenvectors().col(i);
    Mat2 K;
    K << v(0), v(1), v(2), v(3);
    out.push_back(K);
  }
  return out;
}

// Sequential composition of identical blocks, compressing after each step.
inline std::vector<Mat2> compose_blocks(const std::vector<Mat2>& block,
                                        int m) {
  std::vector<Mat2> acc = {Mat2::Identity()};
  for (int i = 0; i < m; ++i) acc = choi_compress(compose(acc, block));
  return acc;
}

// Composition of a heterogeneous chain (blocks may differ per stage).
inline std::vector<Mat2> compose_chain(
    const std::vector<std::vector<Mat2>>& blocks) {
  std::vector<Mat2> acc = {Mat2::Identity()};
  for (const auto& b : blocks) acc = choi_compress(compose(acc, b));
  return acc;
}

// Kraus family of one block under the given protocol specification.
inline std::vector<Mat2> block_kraus(const ProtocolSpec& spec) {
  if (spec.mode == Mode::MultipathTDTC) {
    std::vector<Mat2> ks;
    for (const auto& br : run_tdtc(spec)) ks.push_back(br.K);
    return choi_compress(ks);
  }
  if (spec.mode == Mode::SinglePathMixed)
    return choi_compress(run_single_path_mixed(spec).kraus);
  return choi_compress(run_single_path(spec).kraus);
}

// Simulated m-block end-to-end Haar-average fidelity.
inline double multiblock_fidelity(const ProtocolSpec& spec, int m) {
  return avg_fidelity(compose_blocks(block_kraus(spec), m));
}

// Appendix A heterogeneous two-hop chain: each hop teleports across the
// two-qubit channel sqrt(a)|00> + sqrt(1-a)|11>; the composed chain must
// reproduce Eq. A3.
inline double heterogeneous_chain_sim(double a1, double a2) {
  auto ch = [](double a) {
    Vec v = Vec::Zero(4);
    v(0) = std::sqrt(a);
    v(3) = std::sqrt(1.0 - a);
    return v;
  };
  const Vec c1 = ch(a1), c2 = ch(a2);
  const auto ks = compose(hop_kraus(c1, derive_hop_corrections(c1)),
                          hop_kraus(c2, derive_hop_corrections(c2)));
  return avg_fidelity(ks);
}

}  // namespace qr
