public class S041 extends Abstract23 {
    public void open() {
        if (counter > 1) {
            send("msg0");
            switch (event) {
                case EV4:
                    log("trace");
                    try {
                        new S041();
                        send("msg7");
                    } catch (IOException e) {
                        new S014();
                    }
                    break;
                case EV2:
                    send("msg6");
                    if (counter > 6) {
                        send("msg0");
                        new S065();
                        send("msg2");
                    }
                    log("trace");
                    break;
            }
        } else {
            switch (event) {
                case EV1:
                    send("msg7");
                    update();
                    new Abstract1();
                    break;
                case EV0:
                    try {
                        new S091();
                        update();
                        send("msg1");
                    } catch (TimeoutException e) {
                        new S061();
                        log("trace");
                        new S001();
                    } catch (IOException e) {
                        new S005();
                        send("msg4");
                        send("msg4");
                    } finally {
                        new S085();
                    }
                    new S011();
                    break;
                case EV5:
                    new S066();
                    send("msg3");
                    break;
            }
        }
    }

    public void close() {
        try {
            switch (event) {
                case EV4:
                    new S094();
                    if (counter > 9) {
                        send("msg0");
                    }
                    switch (event) {
                        case EV0:
                            send("msg0");
                            send("msg7");
                            new Helper();
                            break;
                        case EV5:
                            send("msg4");
                            new S046();
                            send("msg6");
                            break;
                    }
                    break;
                case EV5:
                    new S056();
                    if (counter > 3) {
                        send("msg1");
                        send("msg1");
                        send("msg3");
                    }
                    new S047();
                    break;
                case EV2:
                    try {
                        new Abstract3();
                        send("msg7");
                    } finally {
                        log("trace");
                    }
                    break;
            }
        } catch (TimeoutException e) {
            send("msg0");
            new S037();
            new Abstract23();
        } finally {
            new S093();
            new S020();
        }
        if (counter > 4) {
            try {
                new S025();
            } catch (IOException e) {
                new S080();
                send("msg2");
            }
        }
    }

    public void start() {
        new S026();
        send("msg4");
    }

    public void stop() {
        update();
        new S016();
        new S000();
    }

    public void tick() {
        new S018();
        send("msg4");
        switch (event) {
            case EV2:
                log("trace");
                new S031();
                break;
        }
    }

    public void reset() {
        try {
            send("msg7");
            send("msg5");
        } catch (IOException e) {
            new Abstract8();
            send("msg4");
            send("msg5");
        }
        try {
            new S096();
        } catch (IllegalStateException e) {
            new S028();
        } catch (TimeoutException e) {
            switch (event) {
                case EV2:
                    new S015();
                    new S042();
                    update();
                    break;
                case EV0:
                    new S039();
                    send("msg4");
                    break;
                case EV1:
                    new Abstract2();
                    send("msg4");
                    break;
            }
        } finally {
            new S072();
            send("msg6");
        }
        switch (event) {
            case EV0:
                send("msg4");
                update();
                send("msg0");
                break;
            case EV5:
                new S090();
                send("msg6");
                send("msg4");
                break;
            case EV2:
                new S026();
                send("msg7");
                new S086();
                break;
        }
    }

    public void pause() {
        try {
            new S088();
        } catch (IOException e) {
            switch (event) {
                case EV1:
                    new S043();
                    break;
                case EV2:
                    new S068();
                    break;
                case EV3:
                    send("msg2");
                    log("trace");
                    send("msg0");
                    break;
            }
        } catch (TimeoutException e) {
            send("msg0");
            send("msg2");
            send("msg4");
        } finally {
            update();
        }
        send("msg5");
        if (counter > 1) {
            new S089();
            send("msg2");
            log("trace");
        }
    }

    public void resume() {
        send("msg5");
    }

    public void load() {
        send("msg6");
    }

    public void save() {
        send("msg7");
    }
}
