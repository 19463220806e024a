package lvs;

public class LvsCheck {
    public void require(int n) {
        if (n < 0) {
            throw new RuntimeException("negative");
        }
    }

    public int guarded(int n) {
        try {
            require(n);
        } catch (RuntimeException e) {
            return -1;
        }
        return n;
    }

    public String message(int n) {
        try {
            require(n);
        } catch (RuntimeException e) {
            return e.getMessage();
        } catch (Throwable ex) {
            throw ex;
        }
        return "";
    }
}
