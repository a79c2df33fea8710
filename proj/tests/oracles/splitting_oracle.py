# Independent oracle for the splitting of p in Q[x]/(f) when f mod p = (x-c)^2 * (squarefree coprime rest).
# Decides the local type of the quadratic block by brute-force root search in Z_p and in the
# unramified quadratic extension Z_p[t]/(m(t)), certifying roots via Hensel (v(f(r)) > 2 v(f'(r))).
import itertools, sys
def v_p(x, p, cap):
    if x == 0: return cap
    k = 0
    while x % p == 0: x //= p; k += 1
    return k
def ev(coeffs, r, mod):  # coeffs ascending, r int
    acc = 0
    for c in reversed(coeffs): acc = (acc * r + c) % mod
    return acc
def deriv(c): return [i * c[i] for i in range(1, len(c))]
# arithmetic in Z/p^k [t]/(t^2 + s t + n)
def mulq(a, b, s, n, mod):
    a0,a1=a; b0,b1=b
    c0=a0*b0; c1=a0*b1+a1*b0; c2=a1*b1
    # t^2 = -s t - n
    return ((c0 - n*c2) % mod, (c1 - s*c2) % mod)
def evq(coeffs, r, s, n, mod):
    acc=(0,0)
    for c in reversed(coeffs):
        acc=mulq(acc,r,s,n,mod); acc=((acc[0]+c)%mod, acc[1])
    return acc
def vq(z, p, cap):
    return min(v_p(z[0],p,cap), v_p(z[1],p,cap))
def has_root_Zp(f, p, K, c):
    mod=p**K; df=deriv(f)
    for r in range(c, mod, p):
        a=v_p(ev(f,r,mod),p,K); b=v_p(ev(df,r,mod),p,K)
        if a >= K: 
            if 2*b < K - 0 and a > 2*b: return True
        elif a > 2*b: return True
    return False
def any_root_mod(f,p,K,c):
    mod=p**K
    return any(ev(f,r,mod)==0 for r in range(c,mod,p))
def has_root_unram(f,p,K,s,n,c):
    mod=p**K; df=deriv(f)
    for a0 in range(c,mod,p):
        for a1 in range(0,mod,p):
            r=(a0,a1)
            a=vq(evq(f,r,s,n,mod),p,K); b=vq(evq(df,r,s,n,mod),p,K)
            if a>2*b: return True
    return False
def any_root_unram_mod(f,p,K,s,n,c):
    mod=p**K
    return any(evq(f,(a0,a1),s,n,mod)==(0,0) for a0 in range(c,mod,p) for a1 in range(0,mod,p))
def classify(f,p,irr_quad,c,K1=16,K2=8):
    # returns local type of quadratic block
    if has_root_Zp(f,p,K1,c): return "split"
    for k in range(1,K1+1):
        if not any_root_mod(f,p,k,c): break
    else: raise SystemExit("undecided Zp")
    s,n=irr_quad
    if has_root_unram(f,p,K2,s,n,c): return "inert"
    for k in range(1,K2+1):
        if not any_root_unram_mod(f,p,k,s,n,c): return "ramified"
    raise SystemExit("undecided unram")
if __name__=="__main__":
    import json
    f=json.loads(sys.argv[1]); p=int(sys.argv[2]); c=int(sys.argv[3])
    irr={2:(1,1),3:(0,1),5:(0,2)}[p]   # t^2+t+1 over F2, t^2+1 over F3, t^2+2 over F5
    print(classify(f,p,irr,c))
