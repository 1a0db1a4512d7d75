"""Table-mode verification: when no overgroup generators are available, the
identity can still be checked from explicit class data and a basis value
matrix.  The bundled instance is the order-81 system whose normaliser is
realised by a group of order 162; three of its character values are the
roots of x^3 - 9x - 9 inside Z[zeta_9].
"""

from fuschar.exotic import cubic_root_check, table_3492
from fuschar.verify import verify_table_fusion

tf = table_3492()
print(f"{tf.name}: |S| = {tf.group_order}, base classes = {len(tf.labels)}")
print(f"class sizes        : {tf.class_sizes}")
print(f"centralizer orders : {tf.centralizer_orders}")
print(f"merged columns     : {[tf.labels[j] for j in tf.merge_groups[0]]}")

print("\nexact cubic checks for the irrational entries:")
for name, ok in cubic_root_check().items():
    print(f"  {name}: {ok}")

report = verify_table_fusion(tf)
print(f"\nlhs determinant = {report.lhs_det} (= 3^25)")
print(f"rhs product     = {report.rhs_product}")
print(f"verdict         = {report.verdict}")
