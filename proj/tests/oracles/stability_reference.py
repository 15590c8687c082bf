# Reference values for the stability tests (mpmath, 30 digits).
import mpmath as mp
mp.mp.dps = 30
def mk(p,q,r,a1,a3,g):
    def U(w,s): return w*s - 2*a1*s**((p+1)/mp.mpf(2))/(p+1) + 2*g*s**((q+1)/mp.mpf(2))/(q+1) - 2*a3*s**((r+1)/mp.mpf(2))/(r+1)
    def Up(w,s): return w - a1*s**((p-1)/mp.mpf(2)) + g*s**((q-1)/mp.mpf(2)) - a3*s**((r-1)/mp.mpf(2))
    def F1(s): return 2*a1*s**((p-1)/mp.mpf(2))/(p+1) - 2*g*s**((q-1)/mp.mpf(2))/(q+1) + 2*a3*s**((r-1)/mp.mpf(2))/(r+1)
    return U,Up,F1
def first_root(F1,w,hi=50):
    N=20000; prev=mp.mpf(0)
    for k in range(1,N+1):
        s=mp.mpf(hi)*k/N
        if w-F1(s) < 0:
            lo,hi=prev,s
            for _ in range(200):
                m=(lo+hi)/2
                if w-F1(m)>0: lo=m
                else: hi=m
            return lo
        prev=s
    return None
def Q(p,q,r,a1,a3,g,w):
    U,Up,F1=mk(p,q,r,a1,a3,g); a=first_root(F1,w)
    return mp.quad(lambda s: mp.sqrt(s)/mp.sqrt(U(w,s)), [0,a/2]) + mp.quad(lambda u: 2*u*mp.sqrt(a-u*u)/mp.sqrt(U(w,a-u*u)), [0, mp.sqrt(a/2)]), a
def Jraw(p,q,r,a1,a3,g,w):
    U,Up,F1=mk(p,q,r,a1,a3,g); a=first_root(F1,w); upa=Up(w,a)
    f=lambda s: (3+s*(upa-Up(w,s))/U(w,s))*mp.sqrt(s)/mp.sqrt(U(w,s))
    return -1/(2*upa)*(mp.quad(f,[0,a/2]) + mp.quad(lambda u: 2*u*f(a-u*u), [0, mp.sqrt(a/2)]))
for (p,q,r,a1,a3,g,w) in [(2,3,4,1,1,0,mp.mpf(16)/15),(2,3,4,1,1,-1,mp.mpf('0.5')),(3,5,7,1,-1,0,mp.mpf("0.2")),(3,4,7,-1,1,1,mp.mpf(2)),(3,4,7,-1,-1,-3,mp.mpf('0.5'))]:
    q0,a=Q(p,q,r,a1,a3,g,w)
    print((p,q,r,a1,a3,g,float(w)),"a=",mp.nstr(a,20),"Q=",mp.nstr(q0,20),"J=",mp.nstr(Jraw(p,q,r,a1,a3,g,w),20))
