"""Dev exploration: quintic fixture construction by perturbation (not shipped logic)."""
import sys, time
sys.path.insert(0, 'src')
from fractions import Fraction as F
from sepcurve.algebra import TernaryForm, Q, ProjectivePoint
from sepcurve.topology import *

def mul(a, b):
    out = {}
    for (i1,j1),c1 in a.items():
        for (i2,j2),c2 in b.items():
            k=(i1+i2,j1+j2); out[k]=out.get(k,F(0))+F(c1)*F(c2)
    return out

def add(*ds):
    out = {}
    for d in ds:
        for k,c in d.items(): out[k]=out.get(k,F(0))+F(c)
    return {k:v for k,v in out.items() if v}

def scal(a, c):
    return {k: F(c)*v for k,v in a.items()}

def to_form(d, fxy):
    return TernaryForm(d, {(i,j,d-i-j): Q(c) for (i,j),c in fxy.items()})

L1 = {(0,1):1,(0,0):2}           # y + 2
L2 = {(1,0):2,(0,1):-1,(0,0):4}  # 2x - y + 4
L3 = {(1,0):-2,(0,1):-1,(0,0):4} # -2x - y + 4
E  = {(2,0):1,(0,2):1,(0,0):F(-1,2)}
P = mul(mul(mul(L1,L2),L3),E)

for eps in (F(1,2), F(-1,2), F(1,8), F(-1,8), F(1,32), F(-1,32)):
    C = add(P, {(0,0): eps})
    Fq = to_form(5, C)
    t0=time.time()
    try:
        T = compute_topology(Fq)
        kinds = sorted(c.kind for c in T.components)
        ws = [(c.kind, (float(c.witness.x), float(c.witness.y))) for c in T.components]
        print("eps", eps, "->", len(T.components), kinds, "nesting", T.nesting, "%.1fs"%(time.time()-t0))
        for k,w in ws: print("   ", k, "(%.2f, %.2f)"%w)
    except Exception as e:
        print("eps", eps, "->", type(e).__name__, str(e)[:80], "%.1fs"%(time.time()-t0))
