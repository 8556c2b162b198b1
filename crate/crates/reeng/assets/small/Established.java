public class Established extends ConnectionState {
    public void transmit() {
        try {
            write();
        } catch (java.io.IOException e) {
            send("RST");
            new Closed();
        }
    }
}
