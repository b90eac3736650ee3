# Independent check of the SL(2,C) exact-square computation (pure sympy, no ddlab code).
import sympy as sp
from itertools import product
I=sp.I
# forms: dict frozenset-ordered tuple -> coeff; generators 0..5 = a,b,e,abar,bbar,ebar
def mono(*idx): return {tuple(idx):sp.Integer(1)}
def norm(t):
    t=list(t); sign=1
    for i in range(len(t)):
        for j in range(len(t)-1-i):
            if t[j]>t[j+1]: t[j],t[j+1]=t[j+1],t[j]; sign=-sign
    if len(set(t))<len(t): return None,0
    return tuple(t),sign
def add(*fs):
    r={}
    for f in fs:
        for k,v in f.items(): r[k]=sp.expand(r.get(k,0)+v)
    return {k:v for k,v in r.items() if v!=0}
def scal(c,f): return {k:sp.expand(c*v) for k,v in f.items()}
def wedge(f,g):
    r={}
    for k1,v1 in f.items():
        for k2,v2 in g.items():
            t,s=norm(k1+k2)
            if t is None: continue
            r[t]=sp.expand(r.get(t,0)+s*v1*v2)
    return {k:v for k,v in r.items() if v!=0}
a,b,e,A,B,E=[mono(i) for i in range(6)]
dgen={0:scal(-2,wedge(e,a)),1:scal(2,wedge(e,b)),2:wedge(a,b),
      3:scal(-2,wedge(E,A)),4:scal(2,wedge(E,B)),5:wedge(A,B)}
def d(f):
    r={}
    for k,v in f.items():
        for pos,g in enumerate(k):
            left=mono(*k[:pos]) if pos else {():1}
            right=mono(*k[pos+1:]) if pos+1<len(k) else {():1}
            term=wedge(wedge(left,dgen[g]),right)
            r=add(r,scal(v*(-1)**pos,term))
    return r
omega=scal(I/2,add(wedge(a,A),wedge(b,B),wedge(e,E)))
w2=wedge(omega,omega)
prim=add(scal(sp.Rational(1,16),wedge(a,d(A))),scal(sp.Rational(1,16),wedge(b,d(B))),scal(sp.Rational(1,4),wedge(e,d(E))))
print("d w2 =",d(w2))
print("w2 - d prim =",add(w2,scal(-1,d(prim)))=={})
print("w2 - 2 d prim =",add(w2,scal(-2,d(prim)))=={})
