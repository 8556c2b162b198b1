public class Buffer {
    public void flush() {
        new Closed();
        send("FLUSH");
    }
}
